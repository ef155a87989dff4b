"""Tests for src/compiler/artifact.py."""

import json
import os

import pytest

from src.compiler.artifact import compile_full, manifest, read_artifact, reparsed, write_artifact
from src.io.paths import ArtifactPaths, Stage
from src.models.errors import CheckFailed
from tests.conftest import machine
from tests.unit.test_compiler.conftest import compiled


class TestCompileFull:
    """Tests for compile_full."""

    @pytest.mark.parametrize("name", ["bad_unit", "bad_orth", "bad_sep"])
    def test_rejects_ill_formed(self, name):
        """Ill-formed machines should not compile."""
        with pytest.raises(CheckFailed):
            compile_full(machine(name))

    def test_stages(self):
        """Every stage should be present."""
        assert set(compiled("not").stages()) == set(Stage)


class TestArtifactFiles:
    """Tests for writing and reading compiled stages."""

    def test_write_and_read(self, tmp_path):
        """Stages read back from disk should equal the reparsed artifact."""
        artifact = compiled("not")
        paths = ArtifactPaths(base_dir=str(tmp_path / "not_compiled"))
        write_artifact(machine("not"), artifact, paths)

        for stage in Stage:
            assert os.path.exists(paths.term_path(stage))
        assert read_artifact(paths).stages() == reparsed(artifact).stages()

    def test_manifest(self, tmp_path):
        """The manifest should describe the layout and the stage sizes."""
        paths = ArtifactPaths(base_dir=str(tmp_path))
        write_artifact(machine("not"), compiled("not"), paths)
        with open(paths.manifest_path) as f:
            data = json.load(f)

        assert data["state_bits"] == 1
        assert data["time_bound"] == [0, 1]
        assert data["register_length_formula"] == "14·p(n) + ℓ + 11"
        assert data["example_layout"]["register_length"] == 26
        assert set(data["stage_nodes"]) == {stage.value for stage in Stage}

    def test_manifest_model(self):
        """manifest should count distinct nodes per stage."""
        model = manifest(machine("rotation"), compiled("rotation"))
        assert all(count >= 1 for count in model.stage_nodes.values())
        assert model.stage_nodes["full"] >= model.stage_nodes["loop"]
