"""Inverse transform for MEAS-free terms."""

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
    Rot,
    Swap,
    Switch,
    Term,
)
from src.models.errors import NotInvertible


def invert(term: Term) -> Term:
    """Term for the inverse function.

    KQRec swaps the roles of its post-processing h and pre-processing p:
    KQRec[g, h, p | F] inverts to KQRec[g^-1, p^-1, h^-1 | F]. Shared
    subterms stay shared in the result.
    """
    ensure_recursion_limit()
    return _invert(term, {})


def _invert(term: Term, memo: dict[int, Term]) -> Term:
    cached = memo.get(id(term))
    if cached is not None:
        return cached

    match term:
        case Id() | Not() | Swap():
            result = term
        case Phase(theta=theta):
            result = Phase(-theta)
        case Rot(theta=theta):
            result = Rot(-theta)
        case Crot(j=j, inverse=inverse):
            result = Crot(j, not inverse)
        case Meas():
            raise NotInvertible("MEAS has no inverse")
        case Compo(g=g, h=h):
            result = Compo(_invert(h, memo), _invert(g, memo))
        case Switch(t=t, g=g, h=h):
            result = Switch(t, _invert(g, memo), _invert(h, memo))
        case Branch(g=g, h=h):
            result = Branch(_invert(g, memo), _invert(h, memo))
        case KQRec():
            result = KQRec(
                k=term.k,
                t=term.t,
                g=_invert(term.g, memo),
                h=_invert(term.p, memo),
                p=_invert(term.h, memo),
                fs=term.fs,
            )
        case _:
            raise TypeError(f"not a term: {term!r}")

    memo[id(term)] = result
    return result
