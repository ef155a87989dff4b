"""Dense matrices of terms."""

import numpy as np

from src.calculus.evaluator import Evaluator
from src.calculus.terms import Term, bitstrings
from src.models.constants import DENSE_SIZE_CAP
from src.models.errors import TooLarge
from src.qstate.state import basis, densify


def matrix_of(
    term: Term,
    n: int,
    evaluator: Evaluator | None = None,
    cap: int = DENSE_SIZE_CAP,
) -> np.ndarray:
    """2^n x 2^n matrix whose column x is eval(term, |x>)."""
    if n > cap:
        raise TooLarge(f"{n} qubits exceeds the dense-size cap of {cap}")
    evaluator = evaluator or Evaluator()
    matrix = np.zeros((2**n, 2**n), dtype=np.complex128)
    for index, x in enumerate(bitstrings(n)):
        matrix[:, index] = densify(evaluator.eval(term, basis(x)), n, cap)
    return matrix


def unitarity_defect(matrix: np.ndarray) -> float:
    """max |U^dagger U - I| over all entries."""
    size = matrix.shape[0]
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(size))))
