"""Stage three: run the step sweep once per counter slot.

The loop walks the counter. At slot i the slot's second bit is the step
flag: it is carried over the remaining slots and the output area until it
sits right before the configuration code, where the sweep runs on it.
"""

from src.calculus.inversion import invert
from src.calculus.terms import Branch, Id, Swap, Term, branch_map, kqrec
from src.compiler.counters import SLOT_BRANCHES
from src.stdlib.rearrange import in_order


def carry_over_zeros(sweep: Term) -> Term:
    """|f 0^m 1 code> -> |f' 0^m 1 code'> where sweep maps |f code> to |f' code'>."""
    return kqrec(
        1,
        1,
        p=in_order([Swap(), Branch(Id(), sweep)]),
        h=Swap(),
        fs=branch_map(1, ["0"]),
    )


def carry_over_slots(inner: Term) -> Term:
    """|f s_1 .. s_j 11 rest> -> inner applied to |f rest>, slots kept in place."""
    # |f a b> -> |a b f>
    hop = in_order([Swap(), Branch(Swap(), Swap())])
    return kqrec(
        2,
        1,
        p=in_order([hop, Branch(Id(), Branch(Id(), inner))]),
        h=invert(hop),
        fs=branch_map(2, ["00", "01", "10"]),
    )


def compile_loop(sweep: Term) -> Term:
    """Top-level loop; its recursion goes exactly p(n) levels deep."""
    per_slot = carry_over_slots(carry_over_zeros(sweep))
    return kqrec(2, 1, p=Branch(per_slot, Id()), fs=SLOT_BRANCHES)
