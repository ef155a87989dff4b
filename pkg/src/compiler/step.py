"""Stage two: one guarded sweep applying the transition function.

The sweep acts on |f> (x) code(c), f being the step flag. A walker carries
the block K = f q past one cell per level and at every level sees the window

    K | A (current cell) | B (next cell) | C (the cell after)

where it applies U = M T M. T fires when B holds the head and f = 0: it sets
f = 1 and maps (q, symbol of B) to the row's superposition of
(q', written symbol). M moves the head marker from B to C for states entered
moving right and from B to A for states entered moving left. M is an
involution, so on the level after a right move its two applications cancel.
"""

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from src.calculus.inversion import invert
from src.calculus.terms import Term, kqrec
from src.io.logging import get_logger
from src.models.constants import SYMBOL_CODES, UNIT_TOLERANCE
from src.models.errors import UnsupportedRow
from src.qtm.machine import QtmSpec
from src.qtm.wellformed import plain_violation
from src.stdlib.rearrange import in_order, move_block
from src.stdlib.synthesis import synthesize, two_level

logger = get_logger(__name__)

_NOT = np.array([[0, 1], [1, 0]], dtype=np.complex128)

WINDOW_CELLS = 3


@dataclass(frozen=True)
class Window:
    """Qubit positions of K A B C at the front of the walker's residual."""

    state_bits: int

    @property
    def carry(self) -> list[int]:
        """The flag followed by the state bits."""
        return list(range(self.state_bits + 1))

    def bit(self, cell: int, index: int) -> int:
        return self.state_bits + 1 + 4 * cell + index

    @property
    def size(self) -> int:
        return self.state_bits + 1 + 4 * WINDOW_CELLS


A, B, C = 0, 1, 2


# ============================================================================
# ROW ANALYSIS
# ============================================================================


def _running_rows(m: QtmSpec):
    for key, row in m.rows():
        if key[0] == m.final_state:
            continue
        if not row:
            raise UnsupportedRow(f"delta({key[0]} {key[1]}): missing delta row")
        reason = plain_violation(row)
        if reason:
            raise UnsupportedRow(f"delta({key[0]} {key[1]}): {reason}")
        yield key, row


def entry_directions(m: QtmSpec) -> dict[str, int]:
    """Head shift with which each state is entered by the non-final rows."""
    directions: dict[str, int] = {}
    for key, row in _running_rows(m):
        for tr in row:
            known = directions.setdefault(tr.state, tr.shift)
            if known != tr.shift:
                raise UnsupportedRow(
                    f"delta({key[0]} {key[1]}): state {tr.state} is entered moving both "
                    f"{known:+d} and {tr.shift:+d}"
                )
    return directions


def _images(m: QtmSpec) -> dict[str, dict[str, complex]]:
    """Window strings f q sigma -> superposition of f' q' tau."""
    images: dict[str, dict[str, complex]] = {}
    for (state, symbol), row in _running_rows(m):
        image: dict[str, complex] = defaultdict(complex)
        for tr in row:
            image["1" + tr.state + SYMBOL_CODES[tr.write]] += tr.amplitude
        images["0" + state + SYMBOL_CODES[symbol]] = dict(image)
    return images


def _components(images: dict[str, dict[str, complex]]) -> list[tuple[list[str], list[str]]]:
    """Group rows whose images share a basis string."""
    parent: dict[str, str] = {}

    def find(s: str) -> str:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for source, image in images.items():
        parent.setdefault(source, source)
        for target in image:
            parent.setdefault(target, target)
            parent[find(target)] = find(source)

    groups: dict[str, tuple[list[str], list[str]]] = {}
    for s in sorted(parent):
        sources, targets = groups.setdefault(find(s), ([], []))
        (sources if s in images else targets).append(s)
    return sorted(groups.values())


# ============================================================================
# GADGETS
# ============================================================================


def transition_gadget(m: QtmSpec, tol: float = UNIT_TOLERANCE) -> Term:
    """T: fires on f = 0 with the head on B.

    A plain-form row is a single e^{i theta} transition (a controlled PHASE on
    the window) or a cos/sin pair (a controlled ROT between two window
    strings). Both are the one- and two-dimensional cases of ``synthesize``,
    which also covers rows whose images overlap, so every component of rows
    goes through it instead of a hand-built PHASE or ROT gadget.
    """
    w = Window(m.state_bits)
    positions = w.carry + [w.bit(B, 2), w.bit(B, 3)]
    fixed = {w.bit(A, 0): 1, w.bit(A, 1): 0, w.bit(B, 0): 1, w.bit(B, 1): 1}
    images = _images(m)

    ops: list[Term] = []
    for sources, targets in _components(images):
        block = np.array(
            [[images[s].get(t, 0j) for s in sources] for t in targets], dtype=np.complex128
        )
        if not np.allclose(block.conj().T @ block, np.eye(len(sources)), atol=math.sqrt(tol)):
            raise UnsupportedRow(f"rows {', '.join(sources)} are not orthonormal")
        # Complete the rows' images to a unitary on their span
        completed, _ = np.linalg.qr(np.hstack([block, np.eye(len(targets))]))
        completed[:, : len(sources)] = block
        for source, target in zip(sources, targets):
            ops.append(two_level(source, target, positions, _NOT, fixed))
        ops.append(synthesize(targets, positions, completed, fixed))
    return in_order(ops)


def marker_moves(m: QtmSpec) -> Term:
    """M: after a step, move the head marker according to the new state."""
    w = Window(m.state_bits)
    ops: list[Term] = []
    for state, shift in sorted(entry_directions(m).items()):
        if shift == 1:
            positions = w.carry + [w.bit(B, 1), w.bit(C, 1)]
            fixed = {w.bit(A, 0): 1, w.bit(A, 1): 0, w.bit(B, 0): 1, w.bit(C, 0): 1}
        elif shift == -1:
            positions = w.carry + [w.bit(A, 1), w.bit(B, 1)]
            fixed = {w.bit(A, 0): 1, w.bit(B, 0): 1}
        else:
            continue
        # (marker on the first cell, marker on the second) <-> the reverse
        ops.append(two_level("1" + state + "10", "1" + state + "01", positions, _NOT, fixed))
    return in_order(ops)


def compile_step(m: QtmSpec) -> Term:
    """One sweep over |f> (x) code(c); the head must be at least one cell from the edge."""
    w = Window(m.state_bits)
    moves = marker_moves(m)
    window_op = in_order([moves, transition_gadget(m), moves])
    carry = move_block(start=w.state_bits + 1, size=4, shift=w.state_bits + 1)
    walker = kqrec(4, w.size - 4, p=in_order([window_op, carry]), h=invert(carry))
    logger.debug(f"step sweep built for state_bits={m.state_bits}")
    return walker
