"""Tests for src/calculus/properties.py and src/calculus/generator.py."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.calculus.generator import random_term
from src.calculus.matrix import matrix_of, unitarity_defect
from src.calculus.properties import run_suite, to_frame
from src.calculus.terms import Branch, Compo, Id, Meas, Not, Rot
from src.calculus.validation import is_meas_free, validate

PROPERTIES = ["additivity", "homogeneity", "null", "dimension", "norm", "unitarity"]


class TestGenerator:
    """Tests for random_term."""

    def test_terms_are_valid_and_meas_free(self, rng):
        """Every drawn term should validate and contain no MEAS."""
        for _ in range(200):
            term = random_term(rng, depth=4)
            assert validate(term) == []
            assert is_meas_free(term)

    def test_deterministic(self):
        """Same seed should draw the same term."""
        a = random_term(np.random.default_rng(3), depth=4)
        b = random_term(np.random.default_rng(3), depth=4)
        assert a == b


class TestRunSuite:
    """Tests for run_suite."""

    def test_reports_every_property(self):
        """Should report each property once, in order."""
        results = run_suite(Branch(Id(), Not()), 2)
        assert [r.name for r in results] == PROPERTIES

    def test_unitary_term_passes(self):
        """A unitary term should pass everything."""
        results = run_suite(Compo(Not(), Rot(0.4)), 3, seed=1)
        assert all(r.passed for r in results)

    def test_measuring_term_skips_norm(self):
        """Norm and unitarity should be skipped for a measuring term."""
        results = {r.name: r for r in run_suite(Meas(0), 2)}
        assert results["additivity"].passed
        assert results["norm"].detail.startswith("skipped")
        assert results["unitarity"].detail.startswith("skipped")

    def test_seeded(self):
        """The same seed should reproduce the same deviations."""
        term = Compo(Rot(0.3), Branch(Rot(1.1), Not()))
        a = [r.deviation for r in run_suite(term, 3, seed=5)]
        b = [r.deviation for r in run_suite(term, 3, seed=5)]
        assert a == b

    def test_to_frame(self):
        """The frame should have one row per property."""
        frame = to_frame(run_suite(Id(), 1))
        assert frame.columns == ["property", "passed", "deviation", "detail"]
        assert frame.height == len(PROPERTIES)


class TestLinearityOfRandomTerms:
    """Linearity, null, dimension and norm over generator-drawn terms."""

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2**31 - 1), st.integers(min_value=1, max_value=8))
    def test_suite_passes(self, seed, n):
        """Every MEAS-free generated term should pass the suite within 1e-10."""
        term = random_term(np.random.default_rng(seed), depth=3)
        for result in run_suite(term, n, seed=seed, trials=2, tol=1e-10):
            if result.name != "unitarity":
                assert result.passed, result

    def test_matrices_unitary(self, rng):
        """matrix_of of a MEAS-free term should be unitary within 1e-9."""
        for _ in range(20):
            n = int(rng.integers(1, 7))
            assert unitarity_defect(matrix_of(random_term(rng, depth=3), n)) <= 1e-9


@pytest.mark.parametrize("n", [1, 4])
def test_identity_suite(n):
    """The identity should pass on any width."""
    assert all(r.passed for r in run_suite(Id(), n))
