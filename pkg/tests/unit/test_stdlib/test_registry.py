"""Tests for src/stdlib/registry.py."""

import math

import pytest

from src.calculus.terms import Branch, Id, Not, Switch
from src.calculus.textio import write_term
from src.models.errors import UnknownGate
from src.stdlib.control import prefix_skip
from src.stdlib.gates import cphase, z1
from src.stdlib.registry import CONSTRUCTORS, make
from src.stdlib.rearrange import remove_k


class TestMake:
    """Tests for make."""

    def test_nullary(self):
        """cnot takes no arguments."""
        assert make("cnot", []) == Branch(Id(), Not())

    def test_angle(self):
        """Angles should accept pi forms."""
        assert make("z1", ["pi/2"]) == z1(math.pi / 2)
        assert make("cphase", ["0.25"]) == cphase(0.25)

    def test_count(self):
        """Counts should be positive integers."""
        assert make("remove", ["2"]) == remove_k(2)
        with pytest.raises(ValueError):
            make("remove", ["0"])

    def test_term_file(self, tmp_path):
        """prefix-skip and length-guard should read their term from a file."""
        path = tmp_path / "not.term"
        write_term(str(path), Not())
        assert make("prefix-skip", ["1", str(path)]) == prefix_skip(Not(), 1)
        assert make("length-guard", ["3", str(path)]) == Switch(2, Id(), Not())

    def test_unknown(self):
        """Should raise UnknownGate on an unknown name."""
        with pytest.raises(UnknownGate):
            make("teleport", [])

    def test_wrong_arity(self):
        """Should report usage when the argument count is wrong."""
        with pytest.raises(ValueError, match="usage: mk qft K"):
            make("qft", [])

    @pytest.mark.parametrize("name", sorted(CONSTRUCTORS))
    def test_usage_listed(self, name):
        """Every constructor should declare its usage string."""
        assert isinstance(CONSTRUCTORS[name].usage, str)
