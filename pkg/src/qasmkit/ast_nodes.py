"""AST node definitions.

Every node carries a ``span`` excluded from structural equality, so
round-trip tests can compare trees while ignoring layout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .diagnostics import SourceSpan


def _span_field():
    return field(default=None, compare=False, repr=False)


@dataclass
class Node:
    pass


# ---------------------------------------------------------------------------
# Expressions


@dataclass
class Expr(Node):
    pass


@dataclass
class IntLit(Expr):
    value: int
    span: Optional[SourceSpan] = _span_field()


@dataclass
class FloatLit(Expr):
    value: float
    span: Optional[SourceSpan] = _span_field()


@dataclass
class PiLit(Expr):
    span: Optional[SourceSpan] = _span_field()


@dataclass
class BoolLit(Expr):
    value: bool
    span: Optional[SourceSpan] = _span_field()


@dataclass
class BitStringLit(Expr):
    # Written b"1010"; bits[0] in source order is the HIGHEST register index
    # (big-endian display, matching how registers print).
    text: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DurationLit(Expr):
    digits: str
    unit: str  # dt | ns | us | µs | ms | s
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ImaginaryLit(Expr):
    digits: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class Ident(Expr):
    name: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class PhysQubit(Expr):
    index: int
    span: Optional[SourceSpan] = _span_field()


@dataclass
class GenQubit(Expr):
    """$name pattern in a defcal signature."""

    name: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class IndexExpr(Expr):
    base: Expr
    index: Expr
    span: Optional[SourceSpan] = _span_field()


@dataclass
class MemberExpr(Expr):
    base: Expr
    attr: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class UnaryExpr(Expr):
    op: str
    operand: Expr
    span: Optional[SourceSpan] = _span_field()


@dataclass
class BinaryExpr(Expr):
    op: str
    left: Expr
    right: Expr
    span: Optional[SourceSpan] = _span_field()


@dataclass
class CallExpr(Expr):
    name: str
    args: list[Expr]
    span: Optional[SourceSpan] = _span_field()


@dataclass
class MeasureExpr(Expr):
    operand: Expr
    span: Optional[SourceSpan] = _span_field()


@dataclass
class RangeExpr(Expr):
    start: Expr
    stop: Expr
    step: Optional[Expr] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ArrayLit(Expr):
    items: list[Expr]
    span: Optional[SourceSpan] = _span_field()


# ---------------------------------------------------------------------------
# Types


@dataclass
class TypeAst(Node):
    kind: str  # bit|bool|int|uint|float|angle|duration|stretch|qubit|port|frame|waveform
    width: Optional[Expr] = None
    span: Optional[SourceSpan] = _span_field()


# ---------------------------------------------------------------------------
# Gate modifiers


@dataclass
class Modifier(Node):
    pass


@dataclass
class CtrlMod(Modifier):
    count: Optional[Expr] = None
    negative: bool = False
    span: Optional[SourceSpan] = _span_field()


@dataclass
class InvMod(Modifier):
    span: Optional[SourceSpan] = _span_field()


@dataclass
class PowMod(Modifier):
    exponent: Expr = None
    span: Optional[SourceSpan] = _span_field()


# ---------------------------------------------------------------------------
# Statements


@dataclass
class Stmt(Node):
    pass


@dataclass
class IncludeStmt(Stmt):
    path: str
    span: Optional[SourceSpan] = _span_field()


@dataclass
class QuantumDecl(Stmt):
    name: str
    size: Optional[Expr] = None
    oldstyle: bool = False  # declared with qreg
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ClassicalDecl(Stmt):
    type: TypeAst = None
    name: str = ""
    init: Optional[Expr] = None
    io: str = "none"  # none | input | output
    is_const: bool = False
    oldstyle: bool = False  # declared with creg
    span: Optional[SourceSpan] = _span_field()


@dataclass
class StretchDecl(Stmt):
    names: list[str] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class GateDecl(Stmt):
    name: str = ""
    params: list[str] = field(default_factory=list)
    qubits: list[str] = field(default_factory=list)
    body: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class OpaqueDecl(Stmt):
    name: str = ""
    params: list[str] = field(default_factory=list)
    qubits: list[str] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DefParam(Node):
    type: TypeAst = None
    name: str = ""
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DefDecl(Stmt):
    name: str = ""
    params: list[DefParam] = field(default_factory=list)
    return_type: Optional[TypeAst] = None
    body: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ExternDecl(Stmt):
    name: str = ""
    params: list[DefParam] = field(default_factory=list)
    return_type: Optional[TypeAst] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DefcalGrammarDecl(Stmt):
    grammar: str = ""
    span: Optional[SourceSpan] = _span_field()


@dataclass
class CalBlock(Stmt):
    body: list[Stmt] = field(default_factory=list)
    raw_tokens: Optional[list] = None  # non-openpulse grammars keep tokens
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DefcalParam(Node):
    """Either a typed parameter or a literal-value pattern."""

    type: Optional[TypeAst] = None
    name: str = ""
    literal: Optional[Expr] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DefcalDecl(Stmt):
    name: str = ""
    params: list[DefcalParam] = field(default_factory=list)
    qubits: list[Expr] = field(default_factory=list)  # PhysQubit | GenQubit
    return_type: Optional[TypeAst] = None
    body: list[Stmt] = field(default_factory=list)
    raw_tokens: Optional[list] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class GateCall(Stmt):
    modifiers: list[Modifier] = field(default_factory=list)
    name: str = ""
    args: list[Expr] = field(default_factory=list)
    duration: Optional[Expr] = None  # bracketed [dur]
    operands: list[Expr] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class MeasureStmt(Stmt):
    operand: Expr = None
    target: Optional[Expr] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ResetStmt(Stmt):
    operands: list[Expr] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class BarrierStmt(Stmt):
    operands: list[Expr] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class DelayStmt(Stmt):
    duration: Expr = None
    operands: list[Expr] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class BoxStmt(Stmt):
    duration: Optional[Expr] = None
    body: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class AssignStmt(Stmt):
    lvalue: Expr = None
    op: str = "="
    value: Expr = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class IncDecStmt(Stmt):
    lvalue: Expr = None
    op: str = "++"
    span: Optional[SourceSpan] = _span_field()


@dataclass
class IfStmt(Stmt):
    condition: Expr = None
    then_body: list[Stmt] = field(default_factory=list)
    else_body: Optional[list[Stmt]] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ForStmt(Stmt):
    var: str = ""
    range: RangeExpr = None
    body: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class WhileStmt(Stmt):
    condition: Expr = None
    body: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ReturnStmt(Stmt):
    value: Optional[Expr] = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class ExprStmt(Stmt):
    expr: Expr = None
    span: Optional[SourceSpan] = _span_field()


# OpenPulse statements (cal / defcal bodies)


@dataclass
class FrameDecl(Stmt):
    name: str = ""
    port: Expr = None
    frequency: Expr = None
    phase: Expr = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class WaveformDecl(Stmt):
    name: str = ""
    init: Expr = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class PlayStmt(Stmt):
    waveform: Expr = None
    frame: Expr = None
    span: Optional[SourceSpan] = _span_field()


@dataclass
class Program(Node):
    version: Optional[tuple[int, int]] = None
    statements: list[Stmt] = field(default_factory=list)
    span: Optional[SourceSpan] = _span_field()


LValue = Union[Ident, IndexExpr, MemberExpr]
