"""Term text format: parenthesized prefix notation.

    (i) (not) (swap) (phase <θ>) (rot <θ>) (meas <0|1>) (crot <j> [inv])
    (compo <t> <t>) (switch <n> <t> <t>) (branch <t> <t>)
    (kqrec <k> <t> :g <t> :h <t> :p <t> :fs <bits>=self|id ...)

Angles print with 17 significant digits; the parser also accepts ``pi``,
``pi/N``, ``2pi/N`` and ``Mpi/N``.
"""

import math
import re

from src.calculus.evaluator import ensure_recursion_limit
from src.calculus.terms import (
    Branch,
    Compo,
    Crot,
    Id,
    KQRec,
    Meas,
    Not,
    Phase,
    Recur,
    Rot,
    Swap,
    Switch,
    Term,
)
from src.models.errors import ParseError

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_PI_FORM = re.compile(r"^(-?)(\d*)pi(?:/(\d+))?$")


# ============================================================================
# PRINTING
# ============================================================================


def format_angle(theta: float) -> str:
    return format(theta, ".17g")


def format_term(term: Term) -> str:
    ensure_recursion_limit()
    parts: list[str] = []
    _emit(term, parts)
    return "".join(parts)


def _emit(term: Term, out: list[str]) -> None:
    match term:
        case Id() | Not() | Swap():
            out.append(f"({term.name})")
        case Phase(theta=theta) | Rot(theta=theta):
            out.append(f"({term.name} {format_angle(theta)})")
        case Meas(bit=bit):
            out.append(f"(meas {bit})")
        case Crot(j=j, inverse=inverse):
            out.append(f"(crot {j} inv)" if inverse else f"(crot {j})")
        case Compo(g=g, h=h) | Branch(g=g, h=h):
            out.append(f"({term.name} ")
            _emit(g, out)
            out.append(" ")
            _emit(h, out)
            out.append(")")
        case Switch(t=t, g=g, h=h):
            out.append(f"(switch {t} ")
            _emit(g, out)
            out.append(" ")
            _emit(h, out)
            out.append(")")
        case KQRec():
            out.append(f"(kqrec {term.k} {term.t} :g ")
            _emit(term.g, out)
            out.append(" :h ")
            _emit(term.h, out)
            out.append(" :p ")
            _emit(term.p, out)
            out.append(" :fs")
            for prefix, choice in term.fs:
                out.append(f" {prefix}={choice.value}")
            out.append(")")
        case _:
            raise TypeError(f"not a term: {term!r}")


# ============================================================================
# PARSING
# ============================================================================


def parse_angle(text: str) -> float:
    match = _PI_FORM.match(text)
    if match:
        sign, multiple, divisor = match.groups()
        value = (int(multiple) if multiple else 1) * math.pi
        if divisor:
            if int(divisor) == 0:
                raise ParseError(f"zero divisor in angle {text!r}")
            value /= int(divisor)
        return -value if sign else value
    try:
        value = float(text)
    except ValueError as e:
        raise ParseError(f"bad angle {text!r}") from e
    if not math.isfinite(value):
        raise ParseError(f"non-finite angle {text!r}")
    return value


class _Parser:
    def __init__(self, text: str):
        self.tokens = _TOKEN.findall(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of term")
        self.pos += 1
        return token

    def expect(self, token: str) -> None:
        found = self.next()
        if found != token:
            raise ParseError(f"expected {token!r}, found {found!r}")

    def natural(self) -> int:
        token = self.next()
        if not token.isdigit():
            raise ParseError(f"expected a natural number, found {token!r}")
        return int(token)

    def term(self) -> Term:
        self.expect("(")
        head = self.next()
        match head:
            case "i":
                node = Id()
            case "not":
                node = Not()
            case "swap":
                node = Swap()
            case "phase":
                node = Phase(parse_angle(self.next()))
            case "rot":
                node = Rot(parse_angle(self.next()))
            case "meas":
                bit = self.next()
                if bit not in ("0", "1"):
                    raise ParseError(f"meas expects 0 or 1, found {bit!r}")
                node = Meas(int(bit))
            case "crot":
                j = self.natural()
                inverse = self.peek() == "inv"
                if inverse:
                    self.next()
                node = Crot(j, inverse)
            case "compo":
                node = Compo(self.term(), self.term())
            case "branch":
                node = Branch(self.term(), self.term())
            case "switch":
                node = Switch(self.natural(), self.term(), self.term())
            case "kqrec":
                node = self.kqrec()
            case _:
                raise ParseError(f"unknown constructor {head!r}")
        self.expect(")")
        return node

    def kqrec(self) -> KQRec:
        k = self.natural()
        t = self.natural()
        parts: dict[str, Term] = {}
        fs: dict[str, Recur] = {}
        while self.peek() in (":g", ":h", ":p", ":fs"):
            key = self.next()
            if key == ":fs":
                while self.peek() not in (None, ")") and not self.peek().startswith(":"):
                    fs.update([self.branch_entry()])
            else:
                parts[key[1:]] = self.term()
        missing = [name for name in "ghp" if name not in parts]
        if missing:
            raise ParseError(f"kqrec is missing :{', :'.join(missing)}")
        return KQRec(k=k, t=t, g=parts["g"], h=parts["h"], p=parts["p"], fs=fs)

    def branch_entry(self) -> tuple[str, Recur]:
        token = self.next()
        prefix, sep, choice = token.partition("=")
        if not sep or any(c not in "01" for c in prefix) or choice not in ("self", "id"):
            raise ParseError(f"bad fs entry {token!r}")
        return prefix, Recur(choice)


def parse_term(text: str) -> Term:
    ensure_recursion_limit()
    parser = _Parser(text)
    term = parser.term()
    if parser.peek() is not None:
        raise ParseError(f"trailing input after term: {parser.peek()!r}")
    return term


def read_term(path: str) -> Term:
    with open(path) as f:
        return parse_term(f.read())


def write_term(path: str, term: Term) -> None:
    with open(path, "w") as f:
        f.write(format_term(term) + "\n")
