"""Sparse qustrings with explicit register length.

A State maps bitstrings of length ``register_length`` to complex amplitudes.
The leftmost character of a key is the first qubit. The null vector is a
State with no entries; it keeps its register width internally but reports
length 0.
"""

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from src.models.constants import DENSE_SIZE_CAP, PRUNE_EPSILON
from src.models.errors import LengthMismatch, PrefixTooLong, TooLarge


@dataclass(frozen=True)
class State:
    """Immutable sparse state vector."""

    register_length: int
    entries: Mapping[str, complex] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    @property
    def is_null(self) -> bool:
        return not self.entries

    @property
    def length(self) -> int:
        """The reported length: 0 for the null vector."""
        return 0 if self.is_null else self.register_length

    def amplitude(self, key: str) -> complex:
        return self.entries.get(key, 0j)

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self.entries.values())

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def items(self) -> list[tuple[str, complex]]:
        """Entries in lexicographic key order."""
        return sorted(self.entries.items())


# ============================================================================
# CONSTRUCTION
# ============================================================================


def from_amplitudes(
    register_length: int,
    amplitudes: Mapping[str, complex],
    epsilon: float = PRUNE_EPSILON,
) -> State:
    """Build a state, dropping entries whose magnitude is below epsilon."""
    kept = {}
    for key, amp in amplitudes.items():
        if len(key) != register_length:
            raise LengthMismatch(
                f"key {key!r} does not have register length {register_length}"
            )
        amp = complex(amp)
        if not (math.isfinite(amp.real) and math.isfinite(amp.imag)):
            raise ValueError(f"non-finite amplitude for {key!r}")
        if abs(amp) >= epsilon:
            kept[key] = amp
    return State(register_length, kept)


def null_state(register_length: int = 0) -> State:
    return State(register_length, {})


def basis(x: str) -> State:
    """Basis qustring |x>; basis("") is the unit scalar."""
    if any(c not in "01" for c in x):
        raise ValueError(f"not a bitstring: {x!r}")
    return State(len(x), {x: 1 + 0j})


def scalar(value: complex) -> State:
    return from_amplitudes(0, {"": value})


# ============================================================================
# ALGEBRA
# ============================================================================


def tensor(a: State, b: State) -> State:
    """Tensor product; the null vector absorbs, length-0 states scale."""
    width = a.register_length + b.register_length
    if a.is_null or b.is_null:
        return null_state(width)
    product = {
        ka + kb: va * vb for ka, va in a.entries.items() for kb, vb in b.entries.items()
    }
    return from_amplitudes(width, product)


def project_prefix(s: str, phi: State) -> State:
    """Residual <s|phi>: entries starting with s, prefix stripped, not renormalized."""
    if len(s) > phi.register_length:
        raise PrefixTooLong(
            f"prefix of length {len(s)} exceeds register length {phi.register_length}"
        )
    cut = len(s)
    residual = {k[cut:]: v for k, v in phi.entries.items() if k.startswith(s)}
    return State(phi.register_length - cut, residual)


def inner(a: State, b: State) -> complex:
    """<a|b>, conjugate-linear in a; 0 when either side is null."""
    if a.is_null or b.is_null:
        return 0j
    if a.register_length != b.register_length:
        raise LengthMismatch(
            f"inner product of lengths {a.register_length} and {b.register_length}"
        )
    total = 0j
    for key, value in a.entries.items():
        other = b.entries.get(key)
        if other is not None:
            total += value.conjugate() * other
    return total


def add(a: State, b: State) -> State:
    """Vector sum; the null vector is the additive identity."""
    if a.is_null:
        return b
    if b.is_null:
        return a
    if a.register_length != b.register_length:
        raise LengthMismatch(
            f"sum of lengths {a.register_length} and {b.register_length}"
        )
    total = dict(a.entries)
    for key, value in b.entries.items():
        total[key] = total.get(key, 0j) + value
    return from_amplitudes(a.register_length, total)


def scale(phi: State, alpha: complex) -> State:
    return from_amplitudes(
        phi.register_length, {k: alpha * v for k, v in phi.entries.items()}
    )


def max_abs_diff(a: State, b: State) -> float:
    """Largest amplitude-wise difference between two states."""
    keys = set(a.entries) | set(b.entries)
    return max((abs(a.amplitude(k) - b.amplitude(k)) for k in keys), default=0.0)


# ============================================================================
# DENSE REPRESENTATION
# ============================================================================


def densify(phi: State, n: int | None = None, cap: int = DENSE_SIZE_CAP) -> np.ndarray:
    """Dense vector in lexicographic index order (|0...0> first)."""
    n = phi.register_length if n is None else n
    if n > cap:
        raise TooLarge(f"{n} qubits exceeds the dense-size cap of {cap}")
    vector = np.zeros(2**n, dtype=np.complex128)
    for key, value in phi.entries.items():
        vector[int(key, 2) if key else 0] = value
    return vector


def sparsify(vector: np.ndarray, n: int, epsilon: float = PRUNE_EPSILON) -> State:
    if len(vector) != 2**n:
        raise LengthMismatch(f"vector of size {len(vector)} is not 2^{n}")
    amplitudes = {
        format(index, f"0{n}b") if n else "": complex(value)
        for index, value in enumerate(vector)
        if abs(value) >= epsilon
    }
    return from_amplitudes(n, amplitudes, epsilon)


def random_state(n: int, seed: int) -> State:
    """Seeded random unit vector with dense support.

    The support has 2^n entries, so n is limited to the dense-size cap like
    densify; larger n raises TooLarge.
    """
    if n < 1:
        raise ValueError("random_state needs at least one qubit")
    if n > DENSE_SIZE_CAP:
        raise TooLarge(f"{n} qubits exceeds the dense-size cap of {DENSE_SIZE_CAP}")
    rng = np.random.default_rng(seed)
    vector = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    vector /= np.linalg.norm(vector)
    return sparsify(vector, n)
