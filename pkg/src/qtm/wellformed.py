"""Local well-formedness conditions and shape checks for single-tape QTMs."""

import itertools
import math
from collections import defaultdict

from src.calculus.validation import Diagnostic, Severity
from src.models.constants import DIRECTIONS, TAPE_ALPHABET, UNIT_TOLERANCE
from src.qtm.machine import QtmSpec, Transition

# ============================================================================
# SEPARABILITY GEOMETRY
# ============================================================================

# Offsets eps in {0, +-1, +-2}; direction d is admissible for eps when |2d - eps| <= 1
OFFSETS = [-2, -1, 0, 1, 2]
ADMISSIBLE = {eps: [d for d in DIRECTIONS.values() if abs(2 * d - eps) <= 1] for eps in OFFSETS}
OFFSET_COUNT = {d: sum(d in ADMISSIBLE[eps] for eps in OFFSETS) for d in DIRECTIONS.values()}
NATURAL = "nat"  # head coordinate used when eps = 0


def _head_coordinate(d: int, eps: int) -> int | str:
    return NATURAL if eps == 0 else 2 * d - eps


def _row_vector(row: tuple[Transition, ...]) -> dict[tuple[str, str, str], complex]:
    vector: dict[tuple[str, str, str], complex] = defaultdict(complex)
    for tr in row:
        vector[tr.target] += tr.amplitude
    return vector


def _dot(a: dict, b: dict) -> complex:
    return sum((a[key].conjugate() * b[key] for key in a.keys() & b.keys()), 0j)


def separated_vector(row: tuple[Transition, ...], write: str, eps: int) -> dict[tuple[str, int | str], complex]:
    """Restriction of a row to writes of ``write`` and directions admissible for eps.

    Coordinates are (next state, head coordinate), weighted by the inverse
    square root of the number of offsets each direction is admissible for.
    """
    vector: dict[tuple[str, int | str], complex] = defaultdict(complex)
    for tr in row:
        if tr.write != write or tr.shift not in ADMISSIBLE[eps]:
            continue
        weight = 1 / math.sqrt(OFFSET_COUNT[tr.shift])
        vector[(tr.state, _head_coordinate(tr.shift, eps))] += weight * tr.amplitude
    return vector


# ============================================================================
# CHECKS
# ============================================================================


def check_wellformed(m: QtmSpec, tol: float = UNIT_TOLERANCE) -> list[Diagnostic]:
    """Unit length, orthogonality and separability of the transition rows."""
    diagnostics: list[Diagnostic] = []
    rows = list(m.rows())
    vectors = {key: _row_vector(row) for key, row in rows}

    for key, vector in vectors.items():
        norm = math.sqrt(sum(abs(a) ** 2 for a in vector.values()))
        if abs(norm - 1) > tol:
            diagnostics.append(_error(key, f"unit length: row norm is {norm:.12g}"))

    for (k1, v1), (k2, v2) in itertools.combinations(vectors.items(), 2):
        dot = _dot(v1, v2)
        if abs(dot) > tol:
            diagnostics.append(_error(k1, f"orthogonality: dot product with row {_label(k2)} is {abs(dot):.12g}"))

    separated = {
        (key, write, eps): separated_vector(row, write, eps)
        for key, row in rows
        for write in TAPE_ALPHABET
        for eps in OFFSETS
    }
    nonempty = [(label, v) for label, v in separated.items() if v]
    for ((key1, write1, eps1), v1), ((key2, write2, eps2), v2) in itertools.combinations(nonempty, 2):
        if eps1 == eps2:
            continue
        dot = _dot(v1, v2)
        if abs(dot) > tol:
            diagnostics.append(
                _error(
                    key1,
                    f"separability: write {write1} offset {eps1} against row {_label(key2)} "
                    f"write {write2} offset {eps2} gives {abs(dot):.12g}",
                )
            )
    return diagnostics


def check_shape(m: QtmSpec, tol: float = UNIT_TOLERANCE) -> list[Diagnostic]:
    """Plain form and normal form; stationarity is left to the simulator."""
    diagnostics: list[Diagnostic] = []
    for key, row in m.rows():
        state, symbol = key
        if state == m.final_state:
            expected = (m.initial_state, symbol, "R")
            if len(row) != 1 or row[0].target != expected or abs(row[0].amplitude - 1) > tol:
                diagnostics.append(
                    _error(key, f"normal form: expected ({expected[0]} {symbol} R) amp 1")
                )
            continue
        if not row:
            diagnostics.append(_error(key, "missing delta row"))
            continue
        reason = plain_violation(row, tol)
        if reason:
            diagnostics.append(_error(key, f"plain form: {reason}"))

    diagnostics.append(
        Diagnostic(Severity.WARNING, "$", "stationarity is checked when the machine runs")
    )
    return diagnostics


def plain_violation(row: tuple[Transition, ...], tol: float = UNIT_TOLERANCE) -> str | None:
    """Why a row is neither e^{i theta}|t> nor cos(theta)|t1> + sin(theta)|t2>."""
    if len(row) == 1:
        if abs(abs(row[0].amplitude) - 1) > tol:
            return "single transition must have unit-modulus amplitude"
        return None
    if len(row) == 2:
        a, b = row
        if a.target == b.target:
            return "the two transitions share a target"
        if abs(a.amplitude.imag) > tol or abs(b.amplitude.imag) > tol:
            return "cos/sin amplitudes must be real"
        if abs(a.amplitude.real**2 + b.amplitude.real**2 - 1) > tol:
            return "cos/sin amplitudes must satisfy cos^2 + sin^2 = 1"
        return None
    return f"{len(row)} transitions, at most 2 allowed"


def _label(key: tuple[str, str]) -> str:
    return f"({key[0]} {key[1]})"


def _error(key: tuple[str, str], message: str) -> Diagnostic:
    return Diagnostic(Severity.ERROR, f"delta{_label(key)}", message)


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity is Severity.ERROR for d in diagnostics)
