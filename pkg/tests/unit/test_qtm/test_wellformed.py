"""Tests for src/qtm/wellformed.py."""

import pytest

from src.calculus.validation import Severity
from src.qtm.machine import parse_spec
from src.qtm.wellformed import check_shape, check_wellformed, has_errors, plain_violation
from tests.conftest import DATA_DIR, MIXER_SPEC, machine


def messages(diagnostics) -> str:
    return "\n".join(d.message for d in diagnostics)


def machine_text(name: str) -> str:
    return (DATA_DIR / "machines" / f"{name}.qtm").read_text(encoding="utf-8")


class TestCheckWellformed:
    """Tests for check_wellformed."""

    @pytest.mark.parametrize("name", ["identity", "not", "rotation", "shuttle"])
    def test_bundled_machines_pass(self, name):
        """The bundled well-formed machines should report nothing."""
        assert check_wellformed(machine(name)) == []

    def test_stationary_mixer_passes(self):
        """A machine mixing symbols in place should be well formed."""
        assert check_wellformed(parse_spec(MIXER_SPEC)) == []

    def test_unit_length(self):
        """A row of norm sqrt(2) should fail unit length."""
        diagnostics = check_wellformed(machine("bad_unit"))
        assert has_errors(diagnostics)
        assert "unit length" in messages(diagnostics)
        assert any(d.path == "delta(0 0)" for d in diagnostics)

    def test_orthogonality(self):
        """Two rows with the same target should fail orthogonality."""
        assert "orthogonality" in messages(check_wellformed(machine("bad_orth")))

    def test_separability(self):
        """A state entered from both sides should fail separability."""
        diagnostics = check_wellformed(machine("bad_sep"))
        assert "separability" in messages(diagnostics)
        assert "unit length" not in messages(diagnostics)
        assert "orthogonality" not in messages(diagnostics)

    def test_missing_row(self):
        """An empty row has norm 0 and fails unit length."""
        m = parse_spec("state_bits 1\ntime_bound 1\ndelta 0 0 -> (1 0 N) amp 1\n")
        assert "unit length" in messages(check_wellformed(m))


class TestCheckShape:
    """Tests for check_shape and plain_violation."""

    @pytest.mark.parametrize("name", ["identity", "not", "rotation", "shuttle"])
    def test_bundled_machines_pass(self, name):
        """The bundled machines are in plain and normal form."""
        diagnostics = check_shape(machine(name))
        assert not has_errors(diagnostics)
        assert [d.severity for d in diagnostics] == [Severity.WARNING]

    def test_three_branch_row(self):
        """A row with three transitions should not be plain."""
        text = (
            "state_bits 2\ntime_bound 1\n"
            "delta 00 0 -> (01 0 N) amp 0.6 + (10 0 N) amp 0.6 + (11 0 N) amp (0,0.52915026221291817)\n"
        )
        assert "3 transitions" in messages(check_shape(parse_spec(text)))

    def test_final_row_moving_left(self):
        """A final row moving left breaks normal form."""
        m = parse_spec(machine_text("not").replace("1 0 -> (0 0 R)", "1 0 -> (0 0 L)"))
        diagnostics = check_shape(m)
        assert any("normal form" in d.message and d.path == "delta(1 0)" for d in diagnostics)

    def test_missing_row(self):
        """A non-final row without transitions should be reported."""
        m = parse_spec(machine_text("not").replace("delta 0 b -> (1 b N) amp 1\n", ""))
        assert "missing delta row" in messages(check_shape(m))

    @pytest.mark.parametrize(
        "text,reason",
        [
            ("delta 0 0 -> (1 0 N) amp 0.5", "unit-modulus"),
            ("delta 0 0 -> (1 0 N) amp (0,0.6) + (1 1 N) amp 0.8", "real"),
            ("delta 0 0 -> (1 0 N) amp 0.6 + (1 1 N) amp 0.6", "cos^2"),
            ("delta 0 0 -> (1 0 N) amp 0.6 + (1 0 N) amp 0.8", "share a target"),
        ],
    )
    def test_plain_violations(self, text, reason):
        """Each non-plain row should name its reason."""
        m = parse_spec(f"state_bits 1\ntime_bound 1\n{text}\n")
        assert reason in plain_violation(m.row("0", "0"))

    def test_plain_rows(self):
        """e^{i theta}|t> and cos|t1> + sin|t2> rows are plain."""
        m = parse_spec(MIXER_SPEC)
        assert plain_violation(m.row("0", "0")) is None
        assert plain_violation(m.row("1", "0")) is None
