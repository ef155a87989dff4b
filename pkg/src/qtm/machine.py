"""Single-tape QTM specifications and their text format.

States are bitstrings of a fixed length; the initial state is all zeros and
the final state all ones. A spec file looks like::

    state_bits 2
    time_bound 2 1
    delta 00 0 -> (11 1 N) amp 1
    delta 00 1 -> (11 0 N) amp cos(pi/4) + (11 1 N) amp sin(pi/4)

``time_bound`` lists polynomial coefficients, constant term first.
"""

import cmath
import math
import re
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from src.calculus.textio import format_angle, parse_angle
from src.models.constants import DIRECTIONS, TAPE_ALPHABET
from src.models.errors import ParseError

Amplitude = complex


@dataclass(frozen=True)
class Transition:
    state: str
    write: str
    move: str  # L, N or R
    amplitude: Amplitude

    @property
    def shift(self) -> int:
        return DIRECTIONS[self.move]

    @property
    def target(self) -> tuple[str, str, str]:
        return (self.state, self.write, self.move)


@dataclass(frozen=True)
class QtmSpec:
    state_bits: int
    time_bound: tuple[int, ...]
    delta: dict[tuple[str, str], tuple[Transition, ...]] = field(hash=False)
    # Original amplitude text per (row, index), kept for round-tripping
    amplitude_text: dict[tuple[str, str, int], str] = field(default_factory=dict, hash=False, compare=False)

    @property
    def initial_state(self) -> str:
        return "0" * self.state_bits

    @property
    def final_state(self) -> str:
        return "1" * self.state_bits

    @property
    def states(self) -> list[str]:
        return [format(i, f"0{self.state_bits}b") for i in range(2**self.state_bits)]

    def p(self, n: int) -> int:
        """Time bound p(n)."""
        return sum(c * n**i for i, c in enumerate(self.time_bound))

    def row(self, state: str, symbol: str) -> tuple[Transition, ...]:
        return self.delta.get((state, symbol), ())

    def rows(self) -> Iterator[tuple[tuple[str, str], tuple[Transition, ...]]]:
        """Every (state, symbol) pair in canonical order, empty rows included."""
        for state in self.states:
            for symbol in TAPE_ALPHABET:
                yield (state, symbol), self.row(state, symbol)


# ============================================================================
# AMPLITUDE EXPRESSIONS
# ============================================================================

_FUNCTION_FORM = re.compile(r"^(-?)(cos|sin|exp)\((i?)(.+)\)$")
_PAIR_FORM = re.compile(r"^\(([^,]+),([^,]+)\)$")


def parse_amplitude(text: str) -> Amplitude:
    """Decimal, (re,im) pair, cos(t), sin(t) or exp(it), optionally negated."""
    match = _FUNCTION_FORM.match(text)
    if match:
        sign, name, imaginary, angle_text = match.groups()
        theta = parse_angle(angle_text)
        if name == "exp":
            if not imaginary:
                raise ParseError(f"exp amplitude must be exp(i<angle>), got {text!r}")
            value = cmath.exp(1j * theta)
        elif imaginary:
            raise ParseError(f"{name} takes a real angle, got {text!r}")
        else:
            value = complex(math.cos(theta) if name == "cos" else math.sin(theta))
        return -value if sign else value

    match = _PAIR_FORM.match(text)
    try:
        if match:
            return complex(float(match.group(1)), float(match.group(2)))
        return complex(float(text))
    except ValueError as e:
        raise ParseError(f"bad amplitude {text!r}") from e


def format_amplitude(value: Amplitude) -> str:
    if value.imag == 0:
        return format_angle(value.real)
    return f"({format_angle(value.real)},{format_angle(value.imag)})"


# ============================================================================
# FILE FORMAT
# ============================================================================

_DELTA_LINE = re.compile(r"^delta\s+(\S+)\s+(\S+)\s*->\s*(.+)$")
_TUPLE = re.compile(r"\((\S+)\s+(\S+)\s+(\S+)\)\s+amp\s+(\S+)")


def parse_spec(text: str) -> QtmSpec:
    state_bits: int | None = None
    time_bound: tuple[int, ...] | None = None
    delta: dict[tuple[str, str], tuple[Transition, ...]] = {}
    amplitude_text: dict[tuple[str, str, int], str] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("state_bits"):
                state_bits = int(line.split()[1])
            elif line.startswith("time_bound"):
                time_bound = tuple(int(c) for c in line.split()[1:])
            elif line.startswith("delta"):
                key, transitions, texts = _parse_delta(line, state_bits)
                if key in delta:
                    raise ParseError(f"duplicate delta row for {key}")
                delta[key] = transitions
                for index, amp_text in enumerate(texts):
                    amplitude_text[(*key, index)] = amp_text
            else:
                raise ParseError(f"unknown directive {line.split()[0]!r}")
        except (ValueError, IndexError, ParseError) as e:
            raise ParseError(f"line {lineno}: {e}") from e

    if state_bits is None or state_bits < 1:
        raise ParseError("missing or invalid state_bits header")
    if not time_bound or any(c < 0 for c in time_bound):
        raise ParseError("missing or invalid time_bound header")
    return QtmSpec(state_bits, time_bound, delta, amplitude_text)


def _parse_delta(line: str, state_bits: int | None):
    if state_bits is None:
        raise ParseError("delta line before state_bits header")
    match = _DELTA_LINE.match(line)
    if not match:
        raise ParseError(f"malformed delta line {line!r}")
    state, symbol, rhs = match.groups()
    _check_state(state, state_bits)
    _check_symbol(symbol)

    parts = [part.strip() for part in rhs.split(" + ")]
    transitions, texts = [], []
    for part in parts:
        found = _TUPLE.fullmatch(part)
        if not found:
            raise ParseError(f"malformed transition {part!r}")
        target, write, move, amp_text = found.groups()
        _check_state(target, state_bits)
        _check_symbol(write)
        if move not in DIRECTIONS:
            raise ParseError(f"direction must be L, N or R, got {move!r}")
        transitions.append(Transition(target, write, move, parse_amplitude(amp_text)))
        texts.append(amp_text)
    return (state, symbol), tuple(transitions), texts


def _check_state(state: str, state_bits: int) -> None:
    if len(state) != state_bits or set(state) - {"0", "1"}:
        raise ParseError(f"state {state!r} is not a {state_bits}-bit string")


def _check_symbol(symbol: str) -> None:
    if symbol not in TAPE_ALPHABET:
        raise ParseError(f"symbol {symbol!r} is not one of {TAPE_ALPHABET}")


def format_spec(m: QtmSpec) -> str:
    lines = [f"state_bits {m.state_bits}", "time_bound " + " ".join(str(c) for c in m.time_bound)]
    for (state, symbol), transitions in m.rows():
        if not transitions:
            continue
        parts = []
        for index, tr in enumerate(transitions):
            amp = m.amplitude_text.get((state, symbol, index)) or format_amplitude(tr.amplitude)
            parts.append(f"({tr.state} {tr.write} {tr.move}) amp {amp}")
        lines.append(f"delta {state} {symbol} -> " + " + ".join(parts))
    return "\n".join(lines) + "\n"


def load_spec(path: str | Path) -> QtmSpec:
    return parse_spec(Path(path).read_text(encoding="utf-8"))
