"""Direct simulation of skew configurations on the essential tape region.

A run of input length n uses cells -p(n) .. p(n). The input is written from
the start cell 0 rightwards and the head starts on cell 0.
"""

import math
from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from src.io.logging import get_logger
from src.models.constants import BLANK, PRUNE_EPSILON, TAPE_ALPHABET
from src.models.errors import (
    HeadOutOfRegion,
    NotClean,
    NotSimultaneous,
    NotStationary,
    TimeBoundExceeded,
)
from src.qtm.machine import QtmSpec

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class SkewConfig:
    """State, head and the essential tape region split at the start cell.

    ``z2`` holds cells 0 .. p(n); ``z1`` holds cells -p(n) .. -1, left to right.
    """

    z2: str
    z1: str
    h: int
    q: str

    def __post_init__(self) -> None:
        if len(self.z2) != len(self.z1) + 1:
            raise ValueError(f"|z2| must be |z1| + 1, got {len(self.z2)} and {len(self.z1)}")
        if abs(self.h) > self.radius:
            raise HeadOutOfRegion(f"head {self.h} outside [-{self.radius}, {self.radius}]")

    @property
    def radius(self) -> int:
        return len(self.z1)

    @property
    def tape(self) -> str:
        """Cells -p(n) .. p(n) in order."""
        return self.z1 + self.z2

    def symbol_at(self, cell: int) -> str:
        return self.tape[cell + self.radius]

    def with_step(self, q: str, write: str, shift: int) -> "SkewConfig":
        tape = self.tape
        index = self.h + self.radius
        tape = tape[:index] + write + tape[index + 1 :]
        h = self.h + shift
        if abs(h) > self.radius:
            raise HeadOutOfRegion(f"move to cell {h} leaves [-{self.radius}, {self.radius}]")
        return SkewConfig(z2=tape[self.radius :], z1=tape[: self.radius], h=h, q=q)


def from_tape(q: str, h: int, tape: str) -> SkewConfig:
    """Build a config from the full region, cells -r .. r."""
    radius = (len(tape) - 1) // 2
    return SkewConfig(z2=tape[radius:], z1=tape[:radius], h=h, q=q)


class ConfigSuperposition:
    """Finite superposition of skew configurations for one input length."""

    def __init__(self, n: int, entries: Mapping[SkewConfig, complex], epsilon: float = PRUNE_EPSILON):
        self.n = n
        self._entries = MappingProxyType(
            {c: complex(a) for c, a in entries.items() if abs(a) >= epsilon}
        )

    @property
    def entries(self) -> Mapping[SkewConfig, complex]:
        return self._entries

    def items(self) -> Iterator[tuple[SkewConfig, complex]]:
        return iter(sorted(self._entries.items()))

    def amplitude(self, c: SkewConfig) -> complex:
        return self._entries.get(c, 0j)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self._entries.values()))

    def add(self, other: "ConfigSuperposition") -> "ConfigSuperposition":
        total: dict[SkewConfig, complex] = defaultdict(complex, self._entries)
        for c, a in other.entries.items():
            total[c] += a
        return ConfigSuperposition(self.n, total)

    def scale(self, factor: complex) -> "ConfigSuperposition":
        return ConfigSuperposition(self.n, {c: factor * a for c, a in self._entries.items()})

    def max_abs_diff(self, other: "ConfigSuperposition") -> float:
        keys = self._entries.keys() | other.entries.keys()
        return max((abs(self.amplitude(c) - other.amplitude(c)) for c in keys), default=0.0)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"ConfigSuperposition(n={self.n}, size={len(self)})"


# ============================================================================
# EVOLUTION
# ============================================================================


def initial_config(m: QtmSpec, x: str) -> SkewConfig:
    radius = m.p(len(x))
    if len(x) > radius + 1:
        raise HeadOutOfRegion(f"input of length {len(x)} does not fit in {radius + 1} cells")
    z2 = x + BLANK * (radius + 1 - len(x))
    return SkewConfig(z2=z2, z1=BLANK * radius, h=0, q=m.initial_state)


def step_evolve(
    m: QtmSpec,
    c: ConfigSuperposition,
    halt: bool = True,
    epsilon: float = PRUNE_EPSILON,
) -> ConfigSuperposition:
    """One application of the time-evolution operator.

    With ``halt`` set, configurations in the final state are carried
    unchanged; otherwise the final-state rows apply like any other.
    """
    out: dict[SkewConfig, complex] = defaultdict(complex)
    for config, amp in c.entries.items():
        if halt and config.q == m.final_state:
            out[config] += amp
            continue
        for tr in m.row(config.q, config.symbol_at(config.h)):
            out[config.with_step(tr.state, tr.write, tr.shift)] += amp * tr.amplitude
    return ConfigSuperposition(c.n, out, epsilon)


def run(m: QtmSpec, x: str) -> ConfigSuperposition:
    """Evolve from the initial configuration until every path has halted."""
    bound = m.p(len(x))
    current = ConfigSuperposition(len(x), {initial_config(m, x): 1.0})
    steps = 0
    while any(config.q != m.final_state for config in current.entries):
        if steps >= bound:
            raise TimeBoundExceeded(f"machine still running after p({len(x)}) = {bound} steps")
        current = step_evolve(m, current)
        steps += 1
        halted = {config.q == m.final_state for config in current.entries}
        if len(halted) > 1:
            raise NotSimultaneous(f"some paths halted at step {steps} while others continue")

    for config in current.entries:
        if config.h != 0:
            raise NotStationary(f"path halted with the head on cell {config.h}")
        if config.z1.strip(BLANK):
            raise NotClean(f"non-blank symbols left of the start cell: {config.z1!r}")
    logger.debug(f"run on {x!r} halted after {steps} steps with {len(current)} configurations")
    return current


def output_of(config: SkewConfig) -> str:
    """Tape content from the start cell up to the first blank."""
    return config.z2.split(BLANK, 1)[0]


def output_distribution(final: ConfigSuperposition) -> dict[str, float]:
    probabilities: dict[str, float] = defaultdict(float)
    for config, amp in final.entries.items():
        probabilities[output_of(config)] += abs(amp) ** 2
    return dict(sorted(probabilities.items()))


def random_superposition(
    m: QtmSpec, n: int, rng: np.random.Generator, size: int = 8
) -> ConfigSuperposition:
    """Normalized superposition of configurations whose head is at least one cell from the edge."""
    radius = m.p(n)
    states = m.states
    entries: dict[SkewConfig, complex] = {}
    while len(entries) < size:
        tape = "".join(rng.choice(TAPE_ALPHABET, size=2 * radius + 1))
        h = int(rng.integers(-radius + 1, radius)) if radius > 0 else 0
        q = states[int(rng.integers(len(states)))]
        entries[from_tape(q, h, tape)] = complex(rng.normal(), rng.normal())
    norm = math.sqrt(sum(abs(a) ** 2 for a in entries.values()))
    return ConfigSuperposition(n, {c: a / norm for c, a in entries.items()})
