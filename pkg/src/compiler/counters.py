"""Walkers over the step counter and the areas behind it.

The counter is a run of 2-bit slots, 00 before a step has run and 01 after,
closed by 11. Every helper here finds its target by walking the slots, so
none of them depends on the input length.
"""

from src.calculus.terms import Branch, Id, Not, Recur, Term, kqrec
from src.stdlib.control import prefix_skip
from src.stdlib.rearrange import REMOVE_1, remove_k

SLOT_BRANCHES = {"00": Recur.SELF, "01": Recur.SELF, "10": Recur.ID, "11": Recur.ID}


def after_counter(x: Term) -> Term:
    """Apply x to everything after the counter's closing 11."""
    return kqrec(2, 1, p=Branch(Id(), Branch(Id(), x)), fs=SLOT_BRANCHES)


def repeat_by_counter(x: Term) -> Term:
    """Apply x behind the counter once per slot, p(n) times in all."""
    behind = after_counter(x)
    return kqrec(2, 1, p=Branch(Branch(behind, behind), Id()), fs=SLOT_BRANCHES)


def config_scope(x: Term) -> Term:
    """Apply x to the configuration area, found through the marker after the output area."""
    return after_counter(prefix_skip(x, 1))


def counter_to_end() -> Term:
    """|s_1 .. s_P 11 rest> -> |rest 11 s_P .. s_1>."""
    return kqrec(2, 1, p=Id(), h=remove_k(2), fs=SLOT_BRANCHES)


def tilde_terminate() -> Term:
    """Turn the first blank symbol pair (10) of a pair list into the endmarker 11."""
    return kqrec(2, 1, p=Branch(Id(), Not()), fs=SLOT_BRANCHES)


def tilde_strip() -> Term:
    """|0 m_1 .. 0 m_k 11 rest> -> |m_1 .. m_k 1 rest 1 0^k>."""
    return kqrec(2, 1, p=Id(), h=REMOVE_1, fs=SLOT_BRANCHES)
