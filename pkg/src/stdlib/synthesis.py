"""Controlled gadgets and exact synthesis of small unitaries.

A gadget acts on a register of fixed layout: ``target`` and the keys of
``controls`` are qubit positions. Positions before the target are resolved by
nested Branch nodes; controls after the target are reached by swapping them
to the front of the residual register and back.
"""

import cmath
import math
from collections.abc import Mapping, Sequence

import numpy as np

from src.calculus.terms import Branch, Id, Not, Phase, Rot, Swap, Term
from src.models.constants import UNIT_TOLERANCE
from src.stdlib.gates import gps
from src.stdlib.rearrange import branch, in_order

Controls = Mapping[int, int]


def _on_bit(inner: Term, value: int | None) -> Term:
    """Apply inner to the residual when the first qubit equals value."""
    if value is None:
        return branch(inner, inner)
    if isinstance(inner, Id):
        return Id()
    return Branch(inner, Id()) if value == 0 else Branch(Id(), inner)


def controlled(gate: Term, target: int, controls: Controls) -> Term:
    """Apply a single-qubit gate at ``target`` when every control matches."""
    controls = {int(pos): int(bit) for pos, bit in controls.items()}
    if target in controls:
        raise ValueError(f"qubit {target} is both target and control")

    later = sorted(pos for pos in controls if pos > target)
    core = gate
    if later:
        # Innermost first: the last control is examined deepest
        for pos in range(later[-1], target, -1):
            core = in_order([Swap(), _on_bit(core, controls.get(pos)), Swap()])
    for pos in range(target - 1, -1, -1):
        core = _on_bit(core, controls.get(pos))
    return core


def single_qubit(matrix: np.ndarray, tol: float = UNIT_TOLERANCE) -> Term:
    """Exact term for a 2x2 unitary as e^{ia} PHASE(b) ROT(t) PHASE(c)."""
    if np.allclose(matrix, [[0, 1], [1, 0]], atol=tol):
        return Not()
    u00, u01, u10, u11 = matrix[0, 0], matrix[0, 1], matrix[1, 0], matrix[1, 1]
    c, s = abs(u00), abs(u10)
    theta = math.atan2(s, c)
    if c > tol:
        alpha = cmath.phase(u00)
        if s > tol:
            beta = cmath.phase(u10) - alpha
            gamma = cmath.phase(-u01) - alpha
        else:
            beta = cmath.phase(u11) - alpha
            gamma = 0.0
    else:
        alpha = 0.0
        beta = cmath.phase(u10)
        gamma = cmath.phase(-u01)

    ops: list[Term] = []
    if abs(gamma) > tol:
        ops.append(Phase(gamma))
    if theta > tol:
        ops.append(Rot(theta))
    if abs(beta) > tol:
        ops.append(Phase(beta))
    if abs(alpha) > tol:
        ops.append(gps(alpha))
    return in_order(ops)


def two_level(
    x: str,
    y: str,
    positions: Sequence[int],
    matrix: np.ndarray,
    fixed: Controls | None = None,
) -> Term:
    """Unitary acting as ``matrix`` on span{|x>, |y>} and identity elsewhere.

    x and y assign bits to ``positions``; ``fixed`` holds extra control
    values that must also match. A Gray-code path of controlled NOTs brings
    x next to y, the 2x2 block is applied, and the path is undone.
    """
    fixed = dict(fixed or {})
    diff = [i for i in range(len(positions)) if x[i] != y[i]]
    if not diff:
        raise ValueError(f"two-level operation needs distinct strings, got {x!r} twice")

    def controls_for(current: str, skip: int) -> dict[int, int]:
        chosen = {positions[i]: int(current[i]) for i in range(len(positions)) if i != skip}
        chosen.update(fixed)
        return chosen

    path_ops: list[Term] = []
    current = x
    for i in diff[:-1]:
        path_ops.append(controlled(Not(), positions[i], controls_for(current, i)))
        current = current[:i] + y[i] + current[i + 1 :]

    last = diff[-1]
    block = np.asarray(matrix, dtype=np.complex128)
    if current[last] == "1":
        block = block[::-1, ::-1]
    gate = single_qubit(block)
    if isinstance(gate, Id):
        return Id()
    core = controlled(gate, positions[last], controls_for(current, last))
    return in_order(path_ops + [core] + path_ops[::-1])


def synthesize(
    strings: Sequence[str],
    positions: Sequence[int],
    unitary: np.ndarray,
    fixed: Controls | None = None,
    tol: float = UNIT_TOLERANCE,
) -> Term:
    """Unitary on span{|s> : s in strings}, identity on the complement.

    Givens rotations reduce the matrix to a diagonal of phases; the term
    applies the phases and then the inverted rotations.
    """
    size = len(strings)
    work = np.array(unitary, dtype=np.complex128)
    rotations: list[tuple[int, int, np.ndarray]] = []
    for col in range(size - 1):
        for row in range(size - 1, col, -1):
            a, b = work[col, col], work[row, col]
            if abs(b) < tol:
                continue
            r = math.hypot(abs(a), abs(b))
            givens = np.array([[a.conjugate() / r, b.conjugate() / r], [-b / r, a / r]])
            work[[col, row], :] = givens @ work[[col, row], :]
            rotations.append((col, row, givens))

    ops: list[Term] = []
    for index in range(size):
        phase = work[index, index]
        if abs(phase - 1) > tol:
            ops.append(_phase_on(strings[index], positions, phase, fixed))
    for col, row, givens in reversed(rotations):
        ops.append(two_level(strings[col], strings[row], positions, givens.conj().T, fixed))
    return in_order(ops)


def _phase_on(s: str, positions: Sequence[int], phase: complex, fixed) -> Term:
    """Multiply the amplitude of |s> by ``phase``."""
    flipped = ("1" if s[0] == "0" else "0") + s[1:]
    return two_level(s, flipped, positions, np.diag([phase, 1.0]), fixed)
