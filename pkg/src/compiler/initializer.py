"""Stage one: build the code of the initial configuration.

The configuration area starts as ``0^Z 1 x``. Reversing, spreading every
input bit into a 4-bit block and reversing back gives
``0^Z' 1 [000 x_1] .. [000 x_n] 000``; the blocks are tagged as cells, the
first one as the head cell, and moved to the front behind P blank blocks.
The leftover ``0001`` is cleared, every empty block becomes a blank cell
and the state bits 0^l are rotated to the front.
"""

from src.calculus.terms import Id, Not, Term, kqrec
from src.compiler.counters import config_scope, repeat_by_counter
from src.io.logging import get_logger
from src.qtm.machine import QtmSpec
from src.stdlib.control import prefix_skip
from src.stdlib.rearrange import REVERSE, at_position, branch, in_order, rep_k
from src.stdlib.synthesis import controlled

logger = get_logger(__name__)


def spread3() -> Term:
    """|x_n .. x_1 1 0^Z> -> |000 x_n .. 000 x_1 000 1 0^{Z-3n-3}>."""
    return kqrec(1, 1, p=Id(), h=rep_k(3))


def tag_cells() -> Term:
    """[000 x] -> [100 x] on every 4-bit block; the last partial block is kept."""
    return kqrec(4, 3, p=Not())


def clear_stray() -> Term:
    """Clear the 0001 block that follows the last input cell."""
    return kqrec(4, 7, p=controlled(Not(), 7, {0: 1, 4: 0}))


def fill_blanks(state_bits: int) -> Term:
    """Turn every 0000 block into the blank cell 1010; the state-bit tail is kept."""
    mark = branch(at_position(1, Not()), Id())
    return kqrec(4, state_bits + 3, p=in_order([mark, controlled(Not(), 0, {2: 1})]))


def compile_initializer(m: QtmSpec) -> Term:
    ell = m.state_bits
    head_cell = prefix_skip(in_order([tag_cells(), at_position(1, Not())]), 1)
    spread = config_scope(
        in_order([REVERSE, spread3(), REVERSE, head_cell, prefix_skip(REVERSE, 1), REVERSE])
    )
    to_front = repeat_by_counter(prefix_skip(rep_k(4), 1))
    finish = config_scope(
        in_order([clear_stray(), fill_blanks(ell), rep_k(ell)])
    )
    logger.debug(f"initializer built for state_bits={ell}")
    return in_order([spread, to_front, finish])
