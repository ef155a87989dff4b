"""Tests for src/compiler/verify.py."""

import pytest

from src.calculus.evaluator import Evaluator
from src.calculus.textio import format_term, parse_term
from src.compiler.artifact import CompileArtifact, read_artifact, write_artifact
from src.compiler.layout import input_state
from src.compiler.loop import compile_loop
from src.compiler.step import compile_step
from src.compiler.verify import verify_against_qtm
from src.io.paths import ArtifactPaths
from src.qstate.state import State, from_amplitudes
from src.stdlib.rearrange import in_order
from tests.conftest import machine
from tests.unit.test_compiler.conftest import compiled


class TestVerifyAgainstQtm:
    """End-to-end comparison of compiled terms with direct simulation."""

    @pytest.mark.parametrize(
        "name,x,expected",
        [
            ("not", "1", {"0": 1.0}),
            ("not", "0", {"1": 1.0}),
            ("identity", "01", {"01": 1.0}),
            ("rotation", "0", {"0": 0.5, "1": 0.5}),
            ("shuttle", "1", {"1": 1.0}),
        ],
    )
    def test_bundled_machines_short_inputs(self, name, x, expected):
        """Compiled and simulated runs should agree on every bundled machine."""
        report = verify_against_qtm(machine(name), compiled(name), x)
        assert report.passed()
        assert report.p_sim == pytest.approx(expected)
        assert report.p_compiled == pytest.approx(expected)

    @pytest.mark.parametrize(
        "name,x,expected",
        [
            ("identity", "000", {"000": 1.0}),
            ("identity", "101", {"101": 1.0}),
            ("not", "011", {"111": 1.0}),
            ("not", "110", {"010": 1.0}),
            ("rotation", "010", {"010": 0.5, "110": 0.5}),
            ("rotation", "111", {"011": 0.5, "111": 0.5}),
        ],
    )
    def test_three_bit_inputs_from_disk(self, tmp_path, name, x, expected):
        """Stages written to disk and read back should still match the simulator on 3-bit inputs."""
        m = machine(name)
        paths = ArtifactPaths(base_dir=str(tmp_path / name))
        write_artifact(m, compiled(name), paths)
        report = verify_against_qtm(m, read_artifact(paths), x)
        assert report.passed()
        assert report.p_compiled == pytest.approx(expected)
        assert report.max_prefix_dev <= 1e-9

    def test_full_term_goes_through_text(self, monkeypatch):
        """The full term should be printed and parsed back before it runs."""
        seen: list[str] = []

        def recording_parse(text: str):
            seen.append(text)
            return parse_term(text)

        monkeypatch.setattr("src.compiler.verify.parse_term", recording_parse)
        artifact = compiled("not")
        report = verify_against_qtm(machine("not"), artifact, "1")
        assert report.passed()
        assert seen == [format_term(artifact.full_term)]

    def test_superposition_evaluated_as_one_state(self, not_machine):
        """The padded superposition itself should be handed to the evaluator."""
        seen: list[State] = []

        class RecordingEvaluator(Evaluator):
            def eval(self, term, phi):
                seen.append(phi)
                return super().eval(term, phi)

        phi = from_amplitudes(1, {"0": 0.6, "1": 0.8})
        report = verify_against_qtm(not_machine, compiled("not"), phi, RecordingEvaluator())
        assert report.passed()
        assert input_state(not_machine, phi) in seen

    def test_superposed_input(self, not_machine):
        """A superposition of inputs should give the mixed output distribution."""
        phi = from_amplitudes(1, {"0": 0.6, "1": 0.8})
        report = verify_against_qtm(not_machine, compiled("not"), phi)
        assert report.passed()
        assert report.inputs == ["0", "1"]
        assert report.p_compiled == pytest.approx({"0": 0.64, "1": 0.36})

    def test_corrupted_step_detected(self, not_machine):
        """Swapping in another machine's sweep should show up as a deviation."""
        good = compiled("not")
        wrong_loop = compile_loop(compile_step(machine("identity")))
        corrupted = CompileArtifact(
            init_term=good.init_term,
            step_term=good.step_term,
            loop_term=wrong_loop,
            output_term=good.output_term,
            decode_output_term=good.decode_output_term,
            full_term=in_order([good.init_term, wrong_loop, good.output_term]),
        )
        report = verify_against_qtm(not_machine, corrupted, "1")
        assert not report.passed()
        assert report.max_prefix_dev == pytest.approx(1.0)

    def test_to_frame(self):
        """The report frame should list each output once."""
        report = verify_against_qtm(machine("rotation"), compiled("rotation"), "1")
        frame = report.to_frame()
        assert frame.columns == ["output", "p_sim", "p_compiled", "abs_diff"]
        assert frame["output"].to_list() == ["0", "1"]
        assert max(frame["abs_diff"].to_list()) <= 1e-6
