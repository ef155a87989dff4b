"""Composition helpers and qubit rearrangers.

Positions count from 0 at the first qubit of the register the term is
applied to.
"""

from collections.abc import Sequence

from src.calculus.terms import Branch, Compo, Id, Swap, Switch, Term, kqrec
from src.models.errors import EmptyList

# ============================================================================
# COMPOSITION
# ============================================================================


def compo_all(terms: Sequence[Term]) -> Term:
    """f_1 o f_2 o ... o f_m, applying the last term first.

    The Compo nodes form a balanced tree so deep lists stay shallow.
    """
    if not terms:
        raise EmptyList("compo_all needs at least one term")
    if len(terms) == 1:
        return terms[0]
    middle = len(terms) // 2
    return Compo(compo_all(terms[:middle]), compo_all(terms[middle:]))


def in_order(ops: Sequence[Term]) -> Term:
    """Composition applying ``ops`` first to last."""
    ops = [op for op in ops if not isinstance(op, Id)]
    if not ops:
        return Id()
    return compo_all(list(reversed(ops)))


def length_guard(k: int, g: Term) -> Term:
    """Identity on registers shorter than k, g otherwise."""
    if k <= 1:
        # Every term is already the identity on length-0 states
        return g
    return Switch(k - 1, Id(), g)


def branch(g: Term, h: Term) -> Term:
    """Branch that collapses to Id when both sides are Id."""
    if isinstance(g, Id) and isinstance(h, Id):
        return Id()
    return Branch(g, h)


# ============================================================================
# POSITIONAL SWAPS
# ============================================================================


def at_position(j: int, g: Term) -> Term:
    """Apply g to the sub-register starting at qubit j."""
    for _ in range(j):
        g = branch(g, g)
    return g


def adjacent_swap(j: int) -> Term:
    """Exchange qubits j and j+1."""
    return at_position(j, Swap())


def swap_pair(i: int, j: int) -> Term:
    """Exchange qubits i and j by bubbling through adjacent swaps."""
    if i == j:
        return Id()
    i, j = min(i, j), max(i, j)
    forward = [adjacent_swap(m) for m in range(i, j)]
    back = [adjacent_swap(m) for m in range(j - 2, i - 1, -1)]
    return in_order(forward + back)


def move_block(start: int, size: int, shift: int) -> Term:
    """Move the qubits start..start+size-1 left past the ``shift`` qubits before them.

    |c_1..c_shift a_1..a_size> becomes |a_1..a_size c_1..c_shift> on the
    window beginning at qubit start - shift.
    """
    ops = []
    for offset in range(size):
        position = start + offset
        # bubble a_offset left until it sits right after a_{offset-1}
        for m in range(position - 1, start - shift + offset - 1, -1):
            ops.append(adjacent_swap(m))
    return in_order(ops)


# ============================================================================
# REARRANGERS
# ============================================================================

# |a1 a2 ... an> -> |a2 ... an a1>
REMOVE_1 = kqrec(1, 1, p=Swap())

# |a1 ... an-1 an> -> |an a1 ... an-1>
REP_1 = kqrec(1, 1, p=Id(), h=Swap())

REVERSE = kqrec(1, 1, p=Id(), h=REMOVE_1)


def remove_k(k: int) -> Term:
    """Move the first k qubits to the end."""
    return length_guard(k, compo_all([REMOVE_1] * k))


def rep_k(k: int) -> Term:
    """Move the last k qubits to the front."""
    return length_guard(k, compo_all([REP_1] * k))


def swap_k(k: int) -> Term:
    """Exchange the first k qubits with the next k."""
    return length_guard(2 * k, in_order([swap_pair(i, k + i) for i in range(k)]))


def reverse() -> Term:
    return REVERSE


def rearranger(kind: str, k: int | None = None) -> Term:
    """Look up a rearranger by name: remove_k, rep_k, swap_k or reverse."""
    if kind == "reverse":
        return reverse()
    builders = {"remove_k": remove_k, "rep_k": rep_k, "swap_k": swap_k}
    if kind not in builders:
        raise ValueError(f"unknown rearranger {kind!r}")
    if k is None or k < 1:
        raise ValueError(f"{kind} needs k >= 1")
    return builders[kind](k)
