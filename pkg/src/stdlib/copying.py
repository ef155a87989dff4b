"""Copying a tilde-coded string into a zeroed tilde-coded register.

Tilde code writes each bit b as the pair ``0b`` and closes with ``11``. The
copier walks the pairs of the first register; at each pair it carries the pair
along to the first register's end marker, copies the front pair of the second
register into it, and rotates that pair to the back of the second register.
After k pairs the second register is back in its original order.
"""

from functools import cache

from src.calculus.terms import Branch, Id, Not, Term, bitstrings, branch_map, kqrec
from src.models.constants import TILDE_END
from src.stdlib.control import branch_k, lift_bijection
from src.stdlib.rearrange import in_order, swap_k
from src.stdlib.synthesis import controlled

# every pair except the end marker recurses
_WALK = branch_map(2, ["00", "01", "10"])


def _back_table() -> dict[str, str]:
    """|11 X> <-> |X 11> for X != 11, everything else fixed."""
    table = {s: s for s in bitstrings(4)}
    for pair in ("00", "01", "10"):
        table[TILDE_END + pair] = pair + TILDE_END
        table[pair + TILDE_END] = TILDE_END + pair
    return table


@cache
def rotate_front_pair() -> Term:
    """|y_1 y_2 .. y_k 11> psi -> |y_2 .. y_k y_1 11> psi."""
    return kqrec(2, 3, p=swap_k(2), h=lift_bijection(4, _back_table()), fs=_WALK)


def _copy_front() -> Term:
    """|A x ...>: copy the bit of pair x into A, then rotate the tail pairs."""
    copy_local = controlled(Not(), 1, {0: 0, 3: 1})
    bubble = rotate_front_pair()
    # no rotation when A is the end marker
    on_tail = Branch(Branch(bubble, bubble), Branch(bubble, Id()))
    return in_order([copy_local, on_tail])


def _carry_pair() -> Term:
    """Carry the front pair to the first end marker, act there, and bring it back."""
    at_end = branch_k(2, {s: _copy_front() if s == TILDE_END else Id() for s in bitstrings(2)})
    return kqrec(2, 1, p=in_order([swap_k(2), at_end]), h=swap_k(2), fs=_WALK)


@cache
def copy2() -> Term:
    """|~0^k> (x) |~s> psi -> |~s> (x) |~s> psi for every s of length k."""
    return kqrec(2, 1, p=_carry_pair(), fs=_WALK)
