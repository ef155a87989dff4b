"""Tests for src/calculus/complexity.py."""

import math

import pytest

from src.calculus.complexity import dc
from src.calculus.generator import random_term
from src.calculus.terms import Branch, Compo, Id, KQRec, Meas, Not, Phase, Recur, Rot, Swap


class TestDc:
    """Tests for dc."""

    @pytest.mark.parametrize("leaf", [Id(), Not(), Swap(), Phase(0.1), Rot(0.2), Meas(0)])
    def test_initial_functions_count_one(self, leaf):
        """Every initial function should have complexity 1."""
        assert dc(leaf).total == 1

    def test_cnot(self):
        """Branch(I, NOT) should count 3."""
        assert dc(Branch(Id(), Not())).total == 3

    def test_walsh_hadamard(self):
        """Compo(NOT, ROT(pi/4)) should count 3."""
        assert dc(Compo(Not(), Rot(math.pi / 4))).total == 3

    def test_per_constructor(self):
        """Per-constructor counts should sum to the total."""
        report = dc(Compo(Not(), Compo(Phase(1.0), Not())))
        assert report.per_constructor == {"compo": 2, "not": 2, "phase": 1}
        assert sum(report.per_constructor.values()) == report.total

    def test_dag_shares_equal_subterms(self):
        """Structurally equal subterms should count once in the DAG total."""
        report = dc(Compo(Not(), Not()))
        assert report.total == 3
        assert report.dag_total == 2

    def test_kqrec_identity_branches(self):
        """ID branches count as uses of I; SELF entries count 0."""
        term = KQRec(k=1, t=1, g=Not(), h=Not(), p=Not(), fs={"0": Recur.SELF, "1": Recur.ID})
        report = dc(term)
        assert report.per_constructor == {"kqrec": 1, "not": 3, "i": 1}
        assert report.dag_total == 3

    def test_total_at_least_dag(self, rng):
        """total >= dag_total >= 1 for random terms."""
        for _ in range(30):
            report = dc(random_term(rng, depth=4))
            assert report.total >= report.dag_total >= 1

    def test_stable_across_runs(self):
        """The same term should give the same report."""
        term = Branch(Compo(Not(), Rot(0.3)), Id())
        assert dc(term) == dc(term)

    def test_to_frame(self):
        """The frame should list nonzero constructors in canonical order."""
        frame = dc(Branch(Id(), Not())).to_frame()
        assert frame.columns == ["constructor", "count"]
        assert dict(frame.iter_rows()) == {"branch": 1, "i": 1, "not": 1}
