"""Tests for src/calculus/textio.py."""

import math

import pytest

from src.calculus.generator import random_term
from src.calculus.terms import Branch, Compo, Crot, Id, KQRec, Meas, Not, Phase, Recur, Rot, Switch
from src.calculus.textio import format_angle, format_term, parse_angle, parse_term, read_term, write_term
from src.models.errors import ParseError


class TestFormatTerm:
    """Tests for format_term."""

    def test_leaves(self):
        """Leaves should print as parenthesized heads."""
        assert format_term(Id()) == "(i)"
        assert format_term(Meas(1)) == "(meas 1)"
        assert format_term(Crot(3, inverse=True)) == "(crot 3 inv)"

    def test_angle_digits(self):
        """Angles should print with 17 significant digits."""
        assert format_term(Rot(math.pi / 4)) == f"(rot {format(math.pi / 4, '.17g')})"

    def test_nested(self):
        """Rules should print their children in order."""
        assert format_term(Switch(2, Branch(Id(), Not()), Id())) == "(switch 2 (branch (i) (not)) (i))"

    def test_kqrec(self):
        """KQRec should list g, h, p and the sorted branch map."""
        term = KQRec(k=1, t=1, g=Id(), h=Id(), p=Not(), fs={"1": Recur.SELF, "0": Recur.ID})
        assert format_term(term) == "(kqrec 1 1 :g (i) :h (i) :p (not) :fs 0=id 1=self)"


class TestParseTerm:
    """Tests for parse_term and parse_angle."""

    def test_round_trip_random_terms(self, rng):
        """Canonical output should reparse to an equal term and print identically."""
        for _ in range(50):
            term = random_term(rng, depth=4)
            text = format_term(term)
            reparsed = parse_term(text)
            assert reparsed == term
            assert format_term(reparsed) == text

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("pi", math.pi),
            ("pi/4", math.pi / 4),
            ("2pi/8", math.pi / 4),
            ("3pi/4", 3 * math.pi / 4),
            ("-pi/2", -math.pi / 2),
            ("0.25", 0.25),
        ],
    )
    def test_angle_forms(self, text, expected):
        """Should accept decimals and pi fractions."""
        assert parse_angle(text) == pytest.approx(expected)

    def test_angle_normalized(self):
        """Negative angles should land in [0, 2pi)."""
        term = parse_term("(phase -pi/2)")
        assert isinstance(term, Phase)
        assert term.theta == pytest.approx(3 * math.pi / 2)

    def test_whitespace_insensitive(self):
        """Extra whitespace and newlines should not matter."""
        assert parse_term("(compo\n  (not)\n  (i) )") == Compo(Not(), Id())

    def test_crot_inverse(self):
        """Should read the inv flag."""
        assert parse_term("(crot 2 inv)") == Crot(2, inverse=True)

    @pytest.mark.parametrize(
        "text",
        [
            "(nope)",
            "(not",
            "(not) (not)",
            "(meas 2)",
            "(switch x (i) (i))",
            "(phase abc)",
            "(phase pi/0)",
            "(kqrec 1 1 :g (i) :p (not) :fs 0=self 1=self)",
            "(kqrec 1 1 :g (i) :h (i) :p (not) :fs 0=maybe)",
        ],
    )
    def test_rejects_malformed(self, text):
        """Should raise ParseError on malformed text."""
        with pytest.raises(ParseError):
            parse_term(text)

    def test_file_round_trip(self, tmp_path):
        """write_term then read_term should give back the term."""
        path = str(tmp_path / "t.term")
        term = Compo(Rot(0.5), Branch(Id(), Not()))
        write_term(path, term)
        assert read_term(path) == term

    def test_format_angle(self):
        """format_angle should round-trip floats."""
        assert float(format_angle(0.1)) == 0.1
