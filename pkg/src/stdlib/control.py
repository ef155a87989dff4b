"""Branch families, bijections, tensor splitting and prefix skipping."""

from collections.abc import Mapping

import numpy as np

from src.calculus.matrix import matrix_of
from src.calculus.terms import Id, KQRec, Recur, Switch, Term, bitstrings
from src.models.errors import IncompleteFamily, NotBijective
from src.stdlib.rearrange import branch, in_order, length_guard, remove_k, rep_k
from src.stdlib.synthesis import synthesize, two_level

_NOT_MATRIX = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def _check_family(k: int, gs: Mapping[str, Term]) -> None:
    expected = set(bitstrings(k))
    if set(gs) != expected:
        missing = sorted(expected - set(gs))
        extra = sorted(set(gs) - expected)
        raise IncompleteFamily(
            f"family for k={k} is missing {missing or 'nothing'} and has extra {extra or 'nothing'}"
        )


def branch_k(k: int, gs: Mapping[str, Term]) -> Term:
    """|s> (x) g_s(<s|phi>) over the first k qubits; identity when shorter than k."""
    _check_family(k, gs)

    def tree(prefix: str) -> Term:
        if len(prefix) == k:
            return gs[prefix]
        return branch(tree(prefix + "0"), tree(prefix + "1"))

    return tree("")


def rev_branch_k(k: int, gs: Mapping[str, Term]) -> Term:
    """Condition on the last k qubits and apply g_s to the front."""
    return in_order([rep_k(k), branch_k(k, gs), remove_k(k)])


def branch_family(kind: str, k: int, gs: Mapping[str, Term]) -> Term:
    if kind == "branch_k":
        return branch_k(k, gs)
    if kind == "rev_branch_k":
        return rev_branch_k(k, gs)
    raise ValueError(f"unknown branch family {kind!r}")


def lift_bijection(k: int, table: Mapping[str, str]) -> Term:
    """Sum_s |f(s)><s|phi> on the first k qubits; identity below length k.

    Each cycle of f becomes a run of transpositions through its first
    element.
    """
    domain = bitstrings(k)
    if set(table) != set(domain) or sorted(table.values()) != domain:
        raise NotBijective(f"table is not a bijection on {k}-bit strings")

    positions = list(range(k))
    ops: list[Term] = []
    visited: set[str] = set()
    for start in domain:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        while table[cycle[-1]] != start:
            cycle.append(table[cycle[-1]])
            visited.add(cycle[-1])
        for other in cycle[1:]:
            ops.append(two_level(start, other, positions, _NOT_MATRIX))
    return length_guard(k, in_order(ops))


def unitary_on_prefix(unitary: np.ndarray, k: int) -> Term:
    """Apply a 2^k x 2^k unitary to the first k qubits."""
    return synthesize(bitstrings(k), list(range(k)), unitary)


def tensor_split(f: Term, k: int, g: Term) -> Term:
    """f on registers of length <= k, else Sum_s f(|s>) (x) g(<s|phi>)."""
    on_prefix = unitary_on_prefix(matrix_of(f, k), k)
    on_tail = branch_k(k, {s: g for s in bitstrings(k)})
    return Switch(k, f, in_order([on_tail, on_prefix]))


def prefix_skip(f: Term, k: int) -> Term:
    """|0^m 1^k> (x) phi -> |0^m 1^k> (x) f(phi), and |0^{m+1}> unchanged."""
    trigger = "1" * k
    apply_f = branch_k(k, {s: f if s == trigger else Id() for s in bitstrings(k)})
    return KQRec(
        k=1,
        t=1,
        g=Id(),
        h=Id(),
        p=apply_f,
        fs={"0": Recur.SELF, "1": Recur.ID},
    )
