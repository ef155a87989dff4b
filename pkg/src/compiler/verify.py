"""Check a compiled machine against direct simulation.

For every input x the compiled register is split by the final configuration
r decoded from it; the part of the register after the tilde-coded output is
the residual of (x, r). The simulator's residual of (x, r) is a_{x,r} |r>.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

import polars as pl

from src.calculus.evaluator import Evaluator
from src.calculus.textio import format_term, parse_term
from src.compiler.artifact import CompileArtifact
from src.compiler.layout import build_input, input_state, layout_for
from src.compiler.output import read_tilde
from src.io.logging import get_logger
from src.models.errors import InvalidCode
from src.qstate.state import State, basis
from src.qtm.codec import decode_config
from src.qtm.machine import QtmSpec
from src.qtm.simulator import SkewConfig, output_of, run

logger = get_logger(__name__)

Residual = dict[str, complex]
# (input, final configuration or None when the register does not decode)
BranchKey = tuple[str, SkewConfig | None]


@dataclass
class VerifyReport:
    inputs: list[str]
    max_prefix_dev: float
    inner_product_dev: float  # condition (i)
    orthogonality_residual: float  # condition (ii)
    p_sim: dict[str, float] = field(default_factory=dict)
    p_compiled: dict[str, float] = field(default_factory=dict)

    def passed(self, tol: float = 1e-6) -> bool:
        return max(self.max_prefix_dev, self.inner_product_dev, self.orthogonality_residual) <= tol

    def to_frame(self) -> pl.DataFrame:
        """One row per output string seen by either side."""
        outputs = sorted(set(self.p_sim) | set(self.p_compiled), key=lambda s: (len(s), s))
        rows = [
            (
                s,
                self.p_sim.get(s, 0.0),
                self.p_compiled.get(s, 0.0),
                abs(self.p_sim.get(s, 0.0) - self.p_compiled.get(s, 0.0)),
            )
            for s in outputs
        ]
        return pl.DataFrame(
            rows,
            schema={
                "output": pl.String,
                "p_sim": pl.Float64,
                "p_compiled": pl.Float64,
                "abs_diff": pl.Float64,
            },
            orient="row",
        )


def _dot(a: Residual, b: Residual) -> complex:
    return sum((a[key].conjugate() * b[key] for key in a.keys() & b.keys()), 0j)


def _compiled_residuals(m: QtmSpec, out: State, x: str) -> dict[BranchKey, Residual]:
    layout = layout_for(m, len(x))
    offset = layout.final_config_offset
    residuals: dict[BranchKey, Residual] = defaultdict(dict)
    for bits, amp in out.items():
        try:
            r = decode_config(bits[offset : offset + layout.code_length], m.state_bits, layout.p_n)
        except InvalidCode:
            r = None
        split = read_tilde(bits)
        rest = split[1] if split else bits
        residuals[(x, r)][rest] = amp
    return residuals


def verify_against_qtm(
    m: QtmSpec,
    artifact: CompileArtifact,
    phi: State | str,
    evaluator: Evaluator | None = None,
) -> VerifyReport:
    """Compare output probabilities and residual inner products; deviations are the result.

    The full term is printed and parsed back before it runs, so only what
    survives the term text format is checked. Output probabilities come from
    one evaluation on the padded superposition itself; the residual conditions
    are per input and use one evaluation per basis input.
    """
    if isinstance(phi, str):
        phi = basis(phi)
    evaluator = evaluator or Evaluator()
    weights = dict(phi.items())
    full_term = parse_term(format_term(artifact.full_term))

    simulated: dict[BranchKey, complex] = {}
    compiled: dict[BranchKey, Residual] = {}
    for x in weights:
        for config, amp in run(m, x).entries.items():
            simulated[(x, config)] = amp
        out = evaluator.eval(full_term, basis(build_input(m, x)))
        compiled.update(_compiled_residuals(m, out, x))
    superposed = evaluator.eval(full_term, input_state(m, phi))

    # Output probabilities of the superposed input
    by_config: dict[SkewConfig, complex] = defaultdict(complex)
    for (x, config), amp in simulated.items():
        by_config[config] += weights[x] * amp
    p_sim: dict[str, float] = defaultdict(float)
    for config, amp in by_config.items():
        p_sim[output_of(config)] += abs(amp) ** 2
    p_compiled: dict[str, float] = defaultdict(float)
    for bits, amp in superposed.items():
        split = read_tilde(bits)
        p_compiled[split[0] if split else "?"] += abs(amp) ** 2
    outputs = set(p_sim) | set(p_compiled)
    prefix_dev = max(abs(p_sim.get(s, 0.0) - p_compiled.get(s, 0.0)) for s in outputs)

    # Condition (i): |<xi_b|xi_b'>| against the compiled residuals
    branches = sorted(set(simulated) | set(compiled), key=repr)
    inner_dev = 0.0
    for b1, b2 in itertools.combinations_with_replacement(branches, 2):
        sim = 0j
        if b1[1] is not None and b1[1] == b2[1] and b1 in simulated and b2 in simulated:
            sim = simulated[b1].conjugate() * simulated[b2]
        comp = _dot(compiled.get(b1, {}), compiled.get(b2, {}))
        inner_dev = max(inner_dev, abs(abs(sim) - abs(comp)))

    # Condition (ii): residuals of one input with distinct configurations are orthogonal
    orthogonality = 0.0
    for b1, b2 in itertools.combinations(sorted(compiled, key=repr), 2):
        if b1[0] == b2[0]:
            orthogonality = max(orthogonality, abs(_dot(compiled[b1], compiled[b2])))

    logger.info(
        f"verified {len(weights)} input(s): prefix dev {prefix_dev:.3g}, "
        f"inner product dev {inner_dev:.3g}, orthogonality {orthogonality:.3g}"
    )
    return VerifyReport(
        inputs=sorted(weights),
        max_prefix_dev=prefix_dev,
        inner_product_dev=inner_dev,
        orthogonality_residual=orthogonality,
        p_sim=dict(sorted(p_sim.items())),
        p_compiled=dict(sorted(p_compiled.items())),
    )
