"""Static checks on terms."""

import math
from dataclasses import dataclass
from enum import Enum

from src.calculus.terms import (
    Crot,
    KQRec,
    Meas,
    Phase,
    Recur,
    Rot,
    Switch,
    Term,
    bitstrings,
    walk,
)


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """One invariant violation, located by a path like ``$.p.g``."""

    severity: Severity
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity.value} {self.path}: {self.message}"


def is_meas_free(term: Term) -> bool:
    return not any(isinstance(node, Meas) for node in walk(term))


def validate(term: Term, enable_crot: bool = False) -> list[Diagnostic]:
    """Report every invariant violation in the term.

    Shared subterms are checked once, at the first path that reaches them.
    """
    diagnostics: list[Diagnostic] = []
    seen: set[int] = set()
    stack: list[tuple[Term, str]] = [(term, "$")]

    def error(path: str, message: str) -> None:
        diagnostics.append(Diagnostic(Severity.ERROR, path, message))

    while stack:
        node, path = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))

        match node:
            case Phase(theta=theta) | Rot(theta=theta) if not math.isfinite(theta):
                error(path, f"non-finite angle {theta}")
            case Meas(bit=bit) if bit not in (0, 1):
                error(path, f"measured bit must be 0 or 1, got {bit}")
            case Crot(j=j):
                if not enable_crot:
                    error(path, "crot extension is disabled")
                if j < 1:
                    error(path, f"crot index must be >= 1, got {j}")
            case Switch(t=t) if t < 1:
                error(path, f"switch threshold must be >= 1, got {t}")
            case KQRec():
                _check_kqrec(node, path, error)

        children = node.children()
        labels = ("g", "h", "p")
        for label, child in reversed(list(zip(labels, children))):
            stack.append((child, f"{path}.{label}"))

    return diagnostics


def _check_kqrec(node: KQRec, path: str, error) -> None:
    if node.k < 1:
        error(path, f"k must be >= 1, got {node.k}")
        return
    if node.t < 1:
        error(path, f"t must be >= 1, got {node.t}")
    if node.t < node.k - 1:
        error(path, "t < k−1")

    branches = node.branches
    expected = set(bitstrings(node.k))
    missing = sorted(expected - set(branches))
    extra = sorted(set(branches) - expected)
    if missing:
        error(path, f"fs is missing prefixes {', '.join(missing)}")
    if extra:
        error(path, f"fs has prefixes of the wrong length: {', '.join(extra)}")
    if Recur.SELF not in branches.values():
        error(path, "no SelfRef branch")
    if not is_meas_free(node.p):
        error(f"{path}.p", "p is not MEAS-free")
