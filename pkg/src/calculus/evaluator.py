"""State-vector semantics of terms.

Evaluation works on plain ``dict[str, complex]`` amplitude maps together with
the register length, which every rule preserves. Branch and KQRec split the
map by prefix, evaluate the residuals and reattach the prefixes; since the
prefixes are distinct no amplitudes merge there, so pruning only happens
after ROT.
"""

import cmath
import math
import sys
from collections import defaultdict
from dataclasses import dataclass, field

from src.calculus.terms import (
    Branch,
    Compo,
    Crot,
    Id,
    KQRec,
    Meas,
    Not,
    Phase,
    Recur,
    Rot,
    Swap,
    Switch,
    Term,
)
from src.calculus.validation import validate
from src.io.logging import get_logger
from src.models.constants import PRUNE_EPSILON, RECURSION_LIMIT
from src.models.errors import InvalidTerm
from src.qstate.state import State

logger = get_logger(__name__)

Amplitudes = dict[str, complex]

_FLIP = {"0": "1", "1": "0"}


def ensure_recursion_limit() -> None:
    if sys.getrecursionlimit() < RECURSION_LIMIT:
        sys.setrecursionlimit(RECURSION_LIMIT)


@dataclass
class EvalStats:
    """Counters collected during one evaluation."""

    node_visits: int = 0
    # id(KQRec node) -> deepest self re-entry seen
    max_depth: dict[int, int] = field(default_factory=dict)
    # Counted nodes stay referenced so their ids cannot be reused
    nodes: dict[int, KQRec] = field(default_factory=dict, repr=False)

    def record_depth(self, node: KQRec, depth: int) -> None:
        key = id(node)
        self.nodes[key] = node
        if depth > self.max_depth.get(key, -1):
            self.max_depth[key] = depth

    def depth_of(self, node: KQRec) -> int:
        if self.nodes.get(id(node)) is not node:
            return 0
        return self.max_depth[id(node)]


class Evaluator:
    """Evaluates terms on states.

    Each ``eval`` call collects its own ``EvalStats`` and publishes them as
    ``stats`` when it returns, so concurrent calls never share counters and
    ``stats`` holds the call that finished last. Constructing an evaluator
    raises the interpreter recursion limit to ``RECURSION_LIMIT`` for the
    whole process; KQRec unwinding recurses once per level.

    Args:
        enable_crot: Accept Crot nodes (the controlled-rotation extension).
        epsilon: Pruning threshold for amplitudes.
        check: Validate terms before evaluating them.
    """

    def __init__(
        self,
        enable_crot: bool = False,
        epsilon: float = PRUNE_EPSILON,
        check: bool = True,
    ):
        self.enable_crot = enable_crot
        self.epsilon = epsilon
        self.check = check
        self.stats = EvalStats()
        # id -> term; holding the term keeps its id from being reused
        self._validated: dict[int, Term] = {}
        ensure_recursion_limit()

    def reset_stats(self) -> None:
        self.stats = EvalStats()

    def eval(self, term: Term, phi: State) -> State:
        if self.check and self._validated.get(id(term)) is not term:
            diagnostics = validate(term, enable_crot=self.enable_crot)
            if diagnostics:
                raise InvalidTerm(diagnostics)
            self._validated[id(term)] = term
        stats = EvalStats()
        if phi.is_null:
            self.stats = stats
            return phi
        result = self._apply(term, dict(phi.entries), phi.register_length, stats)
        self.stats = stats
        logger.debug(
            f"evaluated {term.name} on {phi.register_length} qubits: "
            f"{len(result)} entries, {stats.node_visits} node visits"
        )
        return State(phi.register_length, result)

    # ------------------------------------------------------------------
    # Rule dispatch
    # ------------------------------------------------------------------

    def _apply(self, term: Term, amps: Amplitudes, n: int, stats: EvalStats) -> Amplitudes:
        if not amps:
            return amps
        stats.node_visits += 1

        match term:
            case Id():
                return amps
            case Compo():
                return self._apply_chain(term, amps, n, stats)
            case Switch(t=t, g=g, h=h):
                return self._apply(g if n <= t else h, amps, n, stats)
            case Branch(g=g, h=h):
                if n <= 1:
                    return amps
                return self._split(amps, n, 1, lambda s: g if s == "0" else h, stats)
            case KQRec():
                return self._apply_kqrec(term, amps, n, 0, stats)
            case _:
                # Initial functions act as the identity on length-0 scalars
                if n == 0:
                    return amps
                return self._apply_initial(term, amps, n)

    def _apply_chain(self, term: Compo, amps: Amplitudes, n: int, stats: EvalStats) -> Amplitudes:
        # Flatten nested compositions into application order: h first
        order: list[Term] = []
        stack: list[Term] = [term]
        while stack:
            node = stack.pop()
            if isinstance(node, Compo):
                stack.append(node.g)
                stack.append(node.h)
            else:
                order.append(node)
        for node in order:
            amps = self._apply(node, amps, n, stats)
            if not amps:
                break
        return amps

    def _split(self, amps: Amplitudes, n: int, k: int, choose, stats: EvalStats) -> Amplitudes:
        """Apply choose(prefix) to each k-bit residual and reattach the prefix."""
        groups: dict[str, Amplitudes] = defaultdict(dict)
        for key, value in amps.items():
            groups[key[:k]][key[k:]] = value
        result: Amplitudes = {}
        for prefix, residual in groups.items():
            image = self._apply(choose(prefix), residual, n - k, stats)
            for key, value in image.items():
                result[prefix + key] = value
        return result

    def _apply_kqrec(
        self, node: KQRec, amps: Amplitudes, n: int, depth: int, stats: EvalStats
    ) -> Amplitudes:
        stats.record_depth(node, depth)
        if n <= node.t:
            return self._apply(node.g, amps, n, stats)

        amps = self._apply(node.p, amps, n, stats)
        branches = node.branches
        groups: dict[str, Amplitudes] = defaultdict(dict)
        k = node.k
        for key, value in amps.items():
            groups[key[:k]][key[k:]] = value
        combined: Amplitudes = {}
        for prefix, residual in groups.items():
            if branches[prefix] is Recur.SELF:
                stats.node_visits += 1
                residual = self._apply_kqrec(node, residual, n - k, depth + 1, stats)
            for key, value in residual.items():
                combined[prefix + key] = value
        return self._apply(node.h, combined, n, stats)

    # ------------------------------------------------------------------
    # Initial functions
    # ------------------------------------------------------------------

    def _apply_initial(self, term: Term, amps: Amplitudes, n: int) -> Amplitudes:
        match term:
            case Not():
                return {_FLIP[k[0]] + k[1:]: v for k, v in amps.items()}
            case Swap():
                if n <= 1:
                    return amps
                return {k[1] + k[0] + k[2:]: v for k, v in amps.items()}
            case Phase(theta=theta):
                w = cmath.exp(1j * theta)
                return {k: (v * w if k[0] == "1" else v) for k, v in amps.items()}
            case Rot(theta=theta):
                return self._rotate(amps, theta)
            case Meas(bit=bit):
                keep = str(bit)
                return {k: v for k, v in amps.items() if k[0] == keep}
            case Crot(j=j, inverse=inverse):
                return self._crot(amps, n, j, inverse)
        raise TypeError(f"not a term: {term!r}")

    def _rotate(self, amps: Amplitudes, theta: float) -> Amplitudes:
        c, s = math.cos(theta), math.sin(theta)
        out: Amplitudes = defaultdict(complex)
        for key, value in amps.items():
            rest = key[1:]
            if key[0] == "0":
                out["0" + rest] += c * value
                out["1" + rest] += s * value
            else:
                out["1" + rest] += c * value
                out["0" + rest] -= s * value
        return {k: v for k, v in out.items() if abs(v) >= self.epsilon}

    @staticmethod
    def _crot(amps: Amplitudes, n: int, j: int, inverse: bool) -> Amplitudes:
        # Only inputs ending in 0^j pick up the phase; all else is untouched
        if n <= j:
            return amps
        w = cmath.exp((-2j if inverse else 2j) * math.pi / 2**j)
        tail = "0" * j
        return {
            k: (v * w if k[0] == "1" and k.endswith(tail) else v)
            for k, v in amps.items()
        }


def evaluate(term: Term, phi: State, enable_crot: bool = False) -> State:
    """One-shot evaluation with a fresh evaluator."""
    return Evaluator(enable_crot=enable_crot).eval(term, phi)
