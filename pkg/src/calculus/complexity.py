"""Descriptional complexity of terms: node counts."""

from collections import Counter
from dataclasses import dataclass, field

import polars as pl

from src.calculus.terms import Crot, KQRec, Meas, Phase, Recur, Rot, Switch, Term, postorder
from src.models.constants import CONSTRUCTOR_NAMES


@dataclass
class DcReport:
    """Node counts of a term."""

    total: int  # Tree count; every initial function and rule use counts 1
    per_constructor: dict[str, int] = field(default_factory=dict)
    dag_total: int = 0  # Structurally equal subterms counted once

    def to_frame(self) -> pl.DataFrame:
        """One row per constructor in the canonical order, zero counts omitted."""
        rows = [
            (name, self.per_constructor[name])
            for name in CONSTRUCTOR_NAMES
            if self.per_constructor.get(name)
        ]
        return pl.DataFrame(
            rows, schema={"constructor": pl.String, "count": pl.Int64}, orient="row"
        )


def dc(term: Term) -> DcReport:
    """Count the nodes of a term.

    SelfRef entries of a KQRec branch map count 0; ``id`` entries count as
    one use of I each.
    """
    nodes = postorder(term)

    counts: dict[int, Counter] = {}
    for node in nodes:
        counter = Counter({node.name: 1})
        if isinstance(node, KQRec):
            identity_uses = sum(1 for _, v in node.fs if v is Recur.ID)
            if identity_uses:
                counter["i"] += identity_uses
        for child in node.children():
            counter.update(counts[id(child)])
        counts[id(node)] = counter

    per_constructor = dict(counts[id(term)])
    return DcReport(
        total=sum(per_constructor.values()),
        per_constructor=per_constructor,
        dag_total=_dag_total(nodes),
    )


def _dag_total(nodes: list[Term]) -> int:
    # Intern each node by (constructor, parameters, child keys)
    keys: dict[int, int] = {}
    interned: dict[tuple, int] = {}
    for node in nodes:
        signature = (node.name, _parameters(node)) + tuple(
            keys[id(child)] for child in node.children()
        )
        keys[id(node)] = interned.setdefault(signature, len(interned))
        if isinstance(node, KQRec) and any(v is Recur.ID for _, v in node.fs):
            # Branch-map identities are uses of the leaf I
            interned.setdefault(("i", ()), len(interned))
    return len(interned)


def _parameters(node: Term) -> tuple:
    match node:
        case Phase(theta=theta) | Rot(theta=theta):
            return (theta,)
        case Meas(bit=bit):
            return (bit,)
        case Crot(j=j, inverse=inverse):
            return (j, inverse)
        case Switch(t=t):
            return (t,)
        case KQRec():
            return (node.k, node.t, node.fs)
    return ()
