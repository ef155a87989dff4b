"""k-qubit quantum Fourier transform."""

import math

from src.calculus.terms import Branch, Id, Phase, Term
from src.models.constants import DENSE_SIZE_CAP
from src.models.errors import TooLarge
from src.stdlib.gates import wh
from src.stdlib.rearrange import at_position, in_order, length_guard, swap_pair


def controlled_phase(control: int, target: int, theta: float) -> Term:
    """Phase e^{i theta} when both qubits are 1 (symmetric in the two)."""
    low, high = min(control, target), max(control, target)
    return at_position(low, Branch(Id(), at_position(high - low - 1, Phase(theta))))


def qft(k: int) -> Term:
    """Fourier transform on the first k qubits, qubit 0 most significant.

    Hadamard and controlled-phase layers leave the output bits reversed;
    a final swap network restores the order.
    """
    if k < 1:
        raise ValueError("qft needs k >= 1")
    if k > DENSE_SIZE_CAP:
        raise TooLarge(f"qft({k}) exceeds the dense-size cap of {DENSE_SIZE_CAP}")

    ops: list[Term] = []
    for i in range(k):
        ops.append(at_position(i, wh()))
        for j in range(i + 1, k):
            ops.append(controlled_phase(j, i, 2 * math.pi / 2 ** (j - i + 1)))
    for i in range(k // 2):
        ops.append(swap_pair(i, k - 1 - i))
    return length_guard(k, in_order(ops))
