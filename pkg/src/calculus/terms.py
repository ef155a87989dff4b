"""The term IR: initial functions and construction rules.

Terms are immutable trees. A KQRec node refers to itself through the
``Recur.SELF`` marker in its branch map, so the IR stays closed without
named recursion.
"""

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import product

from src.models.constants import TWO_PI


class Recur(str, Enum):
    """Branch-map entries of a KQRec node."""

    SELF = "self"
    ID = "id"


def normalize_angle(theta: float) -> float:
    """Reduce an angle into [0, 2pi)."""
    if not math.isfinite(theta):
        return theta
    reduced = math.fmod(theta, TWO_PI)
    if reduced < 0:
        reduced += TWO_PI
    return 0.0 if reduced >= TWO_PI else reduced + 0.0


def bitstrings(k: int) -> list[str]:
    """All bitstrings of length k in lexicographic order."""
    return ["".join(bits) for bits in product("01", repeat=k)]


class Term:
    """Base class of every term node."""

    name = "term"

    def children(self) -> tuple["Term", ...]:
        return ()

    def __str__(self) -> str:
        from src.calculus.textio import format_term

        return format_term(self)


# ============================================================================
# INITIAL FUNCTIONS
# ============================================================================


@dataclass(frozen=True, eq=True)
class Id(Term):
    name = "i"


@dataclass(frozen=True, eq=True)
class Not(Term):
    name = "not"


@dataclass(frozen=True, eq=True)
class Swap(Term):
    name = "swap"


@dataclass(frozen=True, eq=True)
class Phase(Term):
    theta: float
    name = "phase"

    def __post_init__(self):
        object.__setattr__(self, "theta", normalize_angle(float(self.theta)))


@dataclass(frozen=True, eq=True)
class Rot(Term):
    theta: float
    name = "rot"

    def __post_init__(self):
        object.__setattr__(self, "theta", normalize_angle(float(self.theta)))


@dataclass(frozen=True, eq=True)
class Meas(Term):
    bit: int
    name = "meas"


@dataclass(frozen=True, eq=True)
class Crot(Term):
    """Controlled rotation by omega_j (conjugated when ``inverse``)."""

    j: int
    inverse: bool = False
    name = "crot"


# ============================================================================
# CONSTRUCTION RULES
# ============================================================================


@dataclass(frozen=True, eq=True)
class Compo(Term):
    """g after h."""

    g: Term
    h: Term
    name = "compo"

    def children(self) -> tuple[Term, ...]:
        return (self.g, self.h)


@dataclass(frozen=True, eq=True)
class Switch(Term):
    t: int
    g: Term
    h: Term
    name = "switch"

    def children(self) -> tuple[Term, ...]:
        return (self.g, self.h)


@dataclass(frozen=True, eq=True)
class Branch(Term):
    g: Term
    h: Term
    name = "branch"

    def children(self) -> tuple[Term, ...]:
        return (self.g, self.h)


@dataclass(frozen=True, eq=True)
class KQRec(Term):
    """Multi-qubit quantum recursion over k-bit prefixes.

    ``fs`` is stored as a key-sorted tuple of (bitstring, Recur) pairs so the
    node stays hashable; use ``branches`` for a mapping view.
    """

    k: int
    t: int
    g: Term
    h: Term
    p: Term
    fs: tuple[tuple[str, Recur], ...]
    name = "kqrec"

    def __post_init__(self):
        items = self.fs.items() if isinstance(self.fs, Mapping) else self.fs
        normalized = tuple(sorted((str(s), Recur(v)) for s, v in items))
        object.__setattr__(self, "fs", normalized)

    @property
    def branches(self) -> dict[str, Recur]:
        return dict(self.fs)

    def children(self) -> tuple[Term, ...]:
        return (self.g, self.h, self.p)


def kqrec(
    k: int,
    t: int,
    p: Term,
    fs: Mapping[str, Recur | str] | None = None,
    g: Term | None = None,
    h: Term | None = None,
) -> KQRec:
    """KQRec with identity defaults for g and h and an all-self branch map."""
    return KQRec(
        k=k,
        t=t,
        g=g if g is not None else Id(),
        h=h if h is not None else Id(),
        p=p,
        fs=fs if fs is not None else all_self(k),
    )


def all_self(k: int) -> dict[str, Recur]:
    return {s: Recur.SELF for s in bitstrings(k)}


def branch_map(k: int, self_prefixes) -> dict[str, Recur]:
    """Branch map sending the listed prefixes to SELF and the rest to ID."""
    chosen = set(self_prefixes)
    return {s: Recur.SELF if s in chosen else Recur.ID for s in bitstrings(k)}


def walk(term: Term) -> Iterator[Term]:
    """Each distinct node object once, parents before children."""
    seen: set[int] = set()
    stack = [term]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(reversed(node.children()))


def postorder(term: Term) -> list[Term]:
    """Each distinct node object once, children before parents."""
    order: list[Term] = []
    done: set[int] = set()
    stack: list[tuple[Term, bool]] = [(term, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded:
            done.add(id(node))
            order.append(node)
            continue
        stack.append((node, True))
        for child in reversed(node.children()):
            if id(child) not in done:
                stack.append((child, False))
    return order
