"""Linearity, dimension and norm checks of a term on random states."""

from dataclasses import dataclass

import numpy as np
import polars as pl

from src.calculus.evaluator import Evaluator
from src.calculus.matrix import matrix_of, unitarity_defect
from src.calculus.terms import Term
from src.calculus.validation import is_meas_free
from src.qstate.state import add, max_abs_diff, null_state, random_state, scale

PROPERTY_TOLERANCE = 1e-9


@dataclass
class PropertyResult:
    name: str
    passed: bool
    deviation: float
    detail: str = ""


def run_suite(
    term: Term,
    n: int,
    seed: int = 0,
    trials: int = 5,
    evaluator: Evaluator | None = None,
    tol: float = PROPERTY_TOLERANCE,
) -> list[PropertyResult]:
    """Check additivity, homogeneity, f(0) = 0, dimension, norm and unitarity."""
    evaluator = evaluator or Evaluator()
    rng = np.random.default_rng(seed)
    meas_free = is_meas_free(term)

    additivity = homogeneity = norm_dev = 0.0
    dimension_ok = True
    for _ in range(trials):
        phi = random_state(n, int(rng.integers(2**31)))
        psi = random_state(n, int(rng.integers(2**31)))
        alpha = complex(rng.normal(), rng.normal())

        f_phi, f_psi = evaluator.eval(term, phi), evaluator.eval(term, psi)
        additivity = max(additivity, max_abs_diff(evaluator.eval(term, add(phi, psi)), add(f_phi, f_psi)))
        homogeneity = max(homogeneity, max_abs_diff(evaluator.eval(term, scale(phi, alpha)), scale(f_phi, alpha)))
        dimension_ok &= all(len(key) == n for key in f_phi.entries)
        if meas_free:
            norm_dev = max(norm_dev, abs(f_phi.norm() - phi.norm()))

    null_out = evaluator.eval(term, null_state(n))
    results = [
        PropertyResult("additivity", additivity <= tol, additivity),
        PropertyResult("homogeneity", homogeneity <= tol, homogeneity),
        PropertyResult("null", null_out.is_null, 0.0 if null_out.is_null else null_out.norm()),
        PropertyResult("dimension", dimension_ok, 0.0 if dimension_ok else 1.0),
    ]
    if meas_free:
        defect = unitarity_defect(matrix_of(term, n, evaluator))
        results.append(PropertyResult("norm", norm_dev <= tol, norm_dev))
        results.append(PropertyResult("unitarity", defect <= tol, defect))
    else:
        results.append(PropertyResult("norm", True, 0.0, "skipped: term measures"))
        results.append(PropertyResult("unitarity", True, 0.0, "skipped: term measures"))
    return results


def to_frame(results: list[PropertyResult]) -> pl.DataFrame:
    return pl.DataFrame(
        [(r.name, r.passed, r.deviation, r.detail) for r in results],
        schema={"property": pl.String, "passed": pl.Boolean, "deviation": pl.Float64, "detail": pl.String},
        orient="row",
    )
