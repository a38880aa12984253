"""Source spans and structured diagnostics shared by every compiler stage."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


@dataclass(frozen=True)
class SourceSpan:
    """Half-open-ish span: 1-based (line, col) of first and last character."""

    file: str = "<input>"
    start_line: int = 1
    start_col: int = 1
    end_line: int = 1
    end_col: int = 1

    def merge(self, other: "SourceSpan") -> "SourceSpan":
        a, b = self, other
        start = min((a.start_line, a.start_col), (b.start_line, b.start_col))
        end = max((a.end_line, a.end_col), (b.end_line, b.end_col))
        return SourceSpan(self.file, start[0], start[1], end[0], end[1])

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"
    NOTE = "note"


@dataclass
class Diagnostic:
    severity: Severity
    code: str
    message: str
    span: SourceSpan | None = None

    def __str__(self) -> str:
        where = f"{self.span}: " if self.span else ""
        return f"{where}{self.severity.value}[{self.code}]: {self.message}"

    def to_json(self) -> dict:
        out = {"severity": self.severity.value, "code": self.code, "message": self.message}
        if self.span:
            out["span"] = {
                "file": self.span.file,
                "start": [self.span.start_line, self.span.start_col],
                "end": [self.span.end_line, self.span.end_col],
            }
        return out


class QasmError(Exception):
    """Raised for unrecoverable failures; carries the triggering diagnostic."""

    def __init__(self, diag: Diagnostic):
        super().__init__(str(diag))
        self.diag = diag


@dataclass
class DiagnosticBag:
    items: list[Diagnostic] = field(default_factory=list)

    def error(self, code: str, message: str, span: SourceSpan | None = None) -> Diagnostic:
        d = Diagnostic(Severity.ERROR, code, message, span)
        self.items.append(d)
        return d

    def warning(self, code: str, message: str, span: SourceSpan | None = None) -> Diagnostic:
        d = Diagnostic(Severity.WARNING, code, message, span)
        self.items.append(d)
        return d

    def extend(self, other: "DiagnosticBag") -> None:
        self.items.extend(other.items)

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.items if d.severity is Severity.ERROR]

    @property
    def has_errors(self) -> bool:
        return any(d.severity is Severity.ERROR for d in self.items)

    def raise_if_errors(self) -> None:
        if self.has_errors:
            raise QasmError(self.errors[0])
