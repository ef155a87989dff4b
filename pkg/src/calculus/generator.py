"""Random valid MEAS-free terms for property suites."""

import numpy as np

from src.calculus.terms import (
    Branch,
    Compo,
    Id,
    KQRec,
    Not,
    Phase,
    Recur,
    Rot,
    Swap,
    Switch,
    Term,
    bitstrings,
)
from src.models.constants import TWO_PI

LEAF_KINDS = ["i", "not", "swap", "phase", "rot"]
RULE_KINDS = ["compo", "switch", "branch", "kqrec"]


def _random_leaf(rng: np.random.Generator) -> Term:
    kind = LEAF_KINDS[rng.integers(len(LEAF_KINDS))]
    match kind:
        case "i":
            return Id()
        case "not":
            return Not()
        case "swap":
            return Swap()
        case "phase":
            return Phase(rng.uniform(0.0, TWO_PI))
    return Rot(rng.uniform(0.0, TWO_PI))


def random_term(
    rng: np.random.Generator,
    depth: int = 3,
    allow_kqrec: bool = True,
) -> Term:
    """Draw a term of bounded depth that passes validate().

    Args:
        rng: Source of randomness.
        depth: Maximum nesting of construction rules.
        allow_kqrec: Whether KQRec nodes may be drawn.
    """
    if depth <= 0 or rng.random() < 0.25:
        return _random_leaf(rng)

    kinds = RULE_KINDS if allow_kqrec else RULE_KINDS[:-1]
    kind = kinds[rng.integers(len(kinds))]
    match kind:
        case "compo":
            return Compo(
                random_term(rng, depth - 1, allow_kqrec),
                random_term(rng, depth - 1, allow_kqrec),
            )
        case "switch":
            return Switch(
                int(rng.integers(1, 5)),
                random_term(rng, depth - 1, allow_kqrec),
                random_term(rng, depth - 1, allow_kqrec),
            )
        case "branch":
            return Branch(
                random_term(rng, depth - 1, allow_kqrec),
                random_term(rng, depth - 1, allow_kqrec),
            )

    k = int(rng.integers(1, 3))
    t = int(rng.integers(max(1, k - 1), 4))
    prefixes = bitstrings(k)
    fs = {s: Recur.SELF if rng.random() < 0.6 else Recur.ID for s in prefixes}
    fs[prefixes[rng.integers(len(prefixes))]] = Recur.SELF
    # h and p never contain KQRec nodes
    return KQRec(
        k=k,
        t=t,
        g=random_term(rng, depth - 1, allow_kqrec),
        h=random_term(rng, depth - 1, allow_kqrec=False),
        p=random_term(rng, depth - 1, allow_kqrec=False),
        fs=fs,
    )
