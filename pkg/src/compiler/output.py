"""Stages four and five: gather the output and strip its tilde coding.

At halt the configuration area holds ``1^l`` followed by the cells, all
blank left of the start cell. The output area is rotated behind the
configuration, two of its zeros are moved after every cell and filled with
a copy of the cell's symbol code, and the copies are gathered at the end.
Symbol codes 00 and 01 coincide with the tilde pairs of 0 and 1, so after
rotating the copies of cells 0 .. P to the front only the first blank pair
has to become the endmarker.
"""

from src.calculus.terms import Branch, Id, Not, Term, bitstrings, branch_map, kqrec
from src.compiler.counters import (
    after_counter,
    counter_to_end,
    repeat_by_counter,
    tilde_strip,
    tilde_terminate,
)
from src.models.constants import TILDE_END
from src.qtm.machine import QtmSpec
from src.stdlib.control import prefix_skip
from src.stdlib.rearrange import at_position, in_order, remove_k, rep_k
from src.stdlib.synthesis import controlled

# Cells start with 1; the leftover zeros of the output area stop the walk
_CELL_BRANCHES = branch_map(4, [s for s in bitstrings(4) if s[0] == "1"])


def spread_cells() -> Term:
    """[c_1 .. c_m 0^z] -> [c_1 00 c_2 00 .. c_m 00 0^{z-2m}]."""
    return kqrec(4, 3, p=Id(), h=at_position(4, rep_k(2)), fs=_CELL_BRANCHES)


def copy_symbols() -> Term:
    """[m1 m2 s1 s2 0 0] -> [m1 m2 s1 s2 s1 s2] on every 6-bit group."""
    return kqrec(6, 5, p=in_order([controlled(Not(), 4, {2: 1}), controlled(Not(), 5, {3: 1})]))


def gather_copies() -> Term:
    """[c_1 e_1 .. c_m e_m 0^w] -> [c_1 .. c_m 0^w e_1 .. e_m] for w >= 1."""
    return kqrec(4, 3, p=Branch(Id(), at_position(3, remove_k(2))), fs=_CELL_BRANCHES)


def compile_output(m: QtmSpec) -> Term:
    ell = m.state_bits
    # |O 1 code> -> |1 code O>; the output area has 4(P+1) qubits
    output_area_back = in_order([repeat_by_counter(remove_k(4)), after_counter(remove_k(4))])
    copy = after_counter(
        prefix_skip(in_order([spread_cells(), copy_symbols(), gather_copies()]), ell + 1)
    )
    # the last 2(P+1) qubits are the copies of cells 0 .. P
    copies_front = in_order([repeat_by_counter(rep_k(2)), after_counter(rep_k(2))])
    return in_order(
        [output_area_back, copy, copies_front, after_counter(tilde_terminate()), counter_to_end()]
    )


def compile_decode() -> Term:
    return tilde_strip()


# ============================================================================
# READING THE REGISTER
# ============================================================================


def read_tilde(bits: str) -> tuple[str, str] | None:
    """Split ``~M rest`` into (M, rest); None when no endmarker precedes a bad pair."""
    decoded = []
    for start in range(0, len(bits) - 1, 2):
        pair = bits[start : start + 2]
        if pair == TILDE_END:
            return "".join(decoded), bits[start + 2 :]
        if pair[0] != "0":
            return None
        decoded.append(pair[1])
    return None


def read_stripped(bits: str) -> str:
    """Output of the decode stage: the first k bits, k the number of trailing zeros."""
    k = len(bits) - len(bits.rstrip("0"))
    return bits[:k]


def tilde(s: str) -> str:
    return "".join("0" + b for b in s) + TILDE_END
