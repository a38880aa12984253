"""Lexer for OpenQASM 3 source (covering the OpenQASM 2 compatible subset).

Tokenization is lossless: whitespace and comments are emitted as trivia
tokens, so concatenating every token's text reproduces the input byte for
byte.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagnostics import Diagnostic, QasmError, Severity, SourceSpan


class TokenKind(Enum):
    KEYWORD = "keyword"
    IDENT = "identifier"
    INT = "integer"
    FLOAT = "float"
    DURATION = "duration"
    PI = "pi"
    STRING = "string"
    BITSTRING = "bitstring"
    PUNCT = "punctuation"
    PHYSQUBIT = "physical-qubit"
    GENQUBIT = "generic-qubit"
    IMAGINARY = "imaginary"
    COMMENT = "comment"
    WHITESPACE = "whitespace"
    EOF = "eof"


KEYWORDS = frozenset({
    "OPENQASM", "include",
    "qreg", "creg", "qubit", "bit", "bool", "int", "uint", "float", "angle",
    "duration", "stretch", "const", "input", "output",
    "gate", "def", "extern", "defcal", "defcalgrammar", "cal", "opaque",
    "return", "if", "else", "for", "while", "in",
    "measure", "reset", "barrier", "delay", "box",
    "ctrl", "negctrl", "inv", "pow", "gphase", "U",
    "true", "false",
})

DURATION_UNITS = ("dt", "ns", "us", "µs", "ms", "s")

# Longest match first.
PUNCTUATION = (
    "<<=", ">>=", "**", "->", "==", "!=", "<=", ">=", "&&", "||",
    "<<", ">>", "+=", "-=", "*=", "/=", "++", "--",
    "(", ")", "[", "]", "{", "}", ";", ",", ":", ".", "@",
    "+", "-", "*", "/", "%", "<", ">", "=", "!",
)


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan

    def is_trivia(self) -> bool:
        return self.kind in (TokenKind.WHITESPACE, TokenKind.COMMENT)

    def __repr__(self) -> str:
        return f"Token({self.kind.value}, {self.text!r})"


def _is_ident_start(ch: str) -> bool:
    # Identifiers may begin with letters (incl. non-ASCII such as θ) or '_'.
    return ch == "_" or (ch.isalpha() and ch != "π")


def _is_ident_char(ch: str) -> bool:
    return ch == "_" or ch.isdigit() or (ch.isalpha() and ch != "π")


class _Lexer:
    def __init__(self, source: str, file: str = "<input>"):
        self.src = source
        self.file = file
        self.pos = 0
        self.line = 1
        self.col = 1

    def _peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.src[i] if i < len(self.src) else ""

    def _advance(self, n: int = 1) -> str:
        text = self.src[self.pos:self.pos + n]
        for ch in text:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n
        return text

    def _error(self, message: str, start: tuple[int, int]) -> QasmError:
        span = SourceSpan(self.file, start[0], start[1], self.line, self.col)
        return QasmError(Diagnostic(Severity.ERROR, "lex", message, span))

    def _make(self, kind: TokenKind, text: str, start: tuple[int, int]) -> Token:
        end_line, end_col = self.line, max(self.col - 1, 1)
        return Token(kind, text, SourceSpan(self.file, start[0], start[1], end_line, end_col))

    def tokens(self) -> list[Token]:
        out: list[Token] = []
        while self.pos < len(self.src):
            out.append(self._next())
        out.append(Token(TokenKind.EOF, "", SourceSpan(self.file, self.line, self.col, self.line, self.col)))
        return out

    def _next(self) -> Token:
        start = (self.line, self.col)
        ch = self._peek()

        if ch.isspace():
            text = ""
            while self._peek().isspace():
                text += self._advance()
            return self._make(TokenKind.WHITESPACE, text, start)

        if ch == "/" and self._peek(1) == "/":
            text = ""
            while self._peek() and self._peek() != "\n":
                text += self._advance()
            return self._make(TokenKind.COMMENT, text, start)

        if ch == "/" and self._peek(1) == "*":
            text = self._advance(2)
            while self.pos < len(self.src) and not (self._peek() == "*" and self._peek(1) == "/"):
                text += self._advance()
            if self.pos >= len(self.src):
                raise self._error("unterminated block comment", start)
            text += self._advance(2)
            return self._make(TokenKind.COMMENT, text, start)

        if ch == "π":
            self._advance()
            return self._make(TokenKind.PI, "π", start)

        if ch == "$":
            text = self._advance()
            if self._peek().isdigit():
                while self._peek().isdigit():
                    text += self._advance()
                return self._make(TokenKind.PHYSQUBIT, text, start)
            if _is_ident_start(self._peek()):
                # Generic physical-qubit pattern ($q), valid in defcal signatures.
                while _is_ident_char(self._peek()):
                    text += self._advance()
                return self._make(TokenKind.GENQUBIT, text, start)
            raise self._error("'$' must introduce a physical qubit ($n) or defcal pattern ($name)", start)

        if ch == '"':
            return self._string(start, prefix="")

        if ch == "b" and self._peek(1) == '"':
            self._advance()
            return self._string(start, prefix="b")

        if ch.isdigit() or (ch == "." and self._peek(1).isdigit()):
            return self._number(start)

        if _is_ident_start(ch):
            text = ""
            while _is_ident_char(self._peek()):
                text += self._advance()
            if text == "pi":
                return self._make(TokenKind.PI, text, start)
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENT
            return self._make(kind, text, start)

        for punct in PUNCTUATION:
            if self.src.startswith(punct, self.pos):
                self._advance(len(punct))
                return self._make(TokenKind.PUNCT, punct, start)

        raise self._error(f"illegal character {ch!r}", start)

    def _string(self, start: tuple[int, int], prefix: str) -> Token:
        text = prefix + self._advance()  # opening quote
        while self._peek() and self._peek() not in ('"', "\n"):
            text += self._advance()
        if self._peek() != '"':
            raise self._error("unterminated string literal", start)
        text += self._advance()
        kind = TokenKind.BITSTRING if prefix == "b" else TokenKind.STRING
        return self._make(kind, text, start)

    def _number(self, start: tuple[int, int]) -> Token:
        text = ""
        while self._peek().isdigit():
            text += self._advance()
        is_float = False
        if self._peek() == "." and self._peek(1).isdigit():
            is_float = True
            text += self._advance()
            while self._peek().isdigit():
                text += self._advance()
        if self._peek() in ("e", "E") and (
            self._peek(1).isdigit()
            or (self._peek(1) in "+-" and self._peek(2).isdigit())
        ):
            is_float = True
            text += self._advance()
            if self._peek() in "+-":
                text += self._advance()
            while self._peek().isdigit():
                text += self._advance()
            # An exponent float cannot take a duration suffix.
            return self._make(TokenKind.FLOAT, text, start)

        # A trailing letter run is either an SI/dt duration suffix or an error.
        if _is_ident_start(self._peek()) or self._peek() == "µ":
            suffix = ""
            while _is_ident_char(self._peek()) or self._peek() == "µ":
                suffix += self._advance()
            if suffix in DURATION_UNITS:
                return self._make(TokenKind.DURATION, text + suffix, start)
            if suffix == "im":
                return self._make(TokenKind.IMAGINARY, text + suffix, start)
            raise self._error(f"malformed numeric literal {text + suffix!r}", start)

        kind = TokenKind.FLOAT if is_float else TokenKind.INT
        return self._make(kind, text, start)


def tokenize(source: str, file: str = "<input>") -> list[Token]:
    """Lex ``source`` into tokens (trivia included, EOF terminated)."""
    return _Lexer(source, file).tokens()


def duration_literal_parts(text: str) -> tuple[str, str]:
    """Split '30ns' into ('30', 'ns'); the digits keep their written form."""
    for unit in sorted(DURATION_UNITS, key=len, reverse=True):
        if text.endswith(unit):
            return text[: -len(unit)], unit
    raise ValueError(f"not a duration literal: {text!r}")
