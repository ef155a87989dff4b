"""Compilation of a whole machine and the on-disk artifact."""

import json
from dataclasses import dataclass

from pydantic import BaseModel

from src.calculus.complexity import dc
from src.calculus.terms import Term
from src.calculus.textio import format_term, parse_term, read_term, write_term
from src.calculus.validation import Severity, validate
from src.compiler.initializer import compile_initializer
from src.compiler.layout import REGISTER_LENGTH_FORMULA, layout_for
from src.compiler.loop import compile_loop
from src.compiler.output import compile_decode, compile_output
from src.compiler.step import compile_step
from src.io.logging import get_logger
from src.io.paths import ArtifactPaths, Stage
from src.models.errors import CheckFailed, InvalidTerm
from src.qtm.machine import QtmSpec
from src.qtm.wellformed import check_shape, check_wellformed, has_errors
from src.stdlib.rearrange import in_order

logger = get_logger(__name__)


@dataclass
class CompileArtifact:
    init_term: Term
    step_term: Term
    loop_term: Term
    output_term: Term
    decode_output_term: Term
    full_term: Term
    register_length_formula: str = REGISTER_LENGTH_FORMULA

    def stages(self) -> dict[Stage, Term]:
        return {
            Stage.INIT: self.init_term,
            Stage.STEP: self.step_term,
            Stage.LOOP: self.loop_term,
            Stage.OUTPUT: self.output_term,
            Stage.DECODE: self.decode_output_term,
            Stage.FULL: self.full_term,
        }

    @classmethod
    def from_stages(cls, terms: dict[Stage, Term]) -> "CompileArtifact":
        return cls(
            init_term=terms[Stage.INIT],
            step_term=terms[Stage.STEP],
            loop_term=terms[Stage.LOOP],
            output_term=terms[Stage.OUTPUT],
            decode_output_term=terms[Stage.DECODE],
            full_term=terms[Stage.FULL],
        )

    def decoded_term(self) -> Term:
        """full_term followed by the tilde decoding."""
        return in_order([self.full_term, self.decode_output_term])


class CompileManifest(BaseModel):
    """What ``qtm compile`` records next to the stage terms."""

    state_bits: int
    time_bound: list[int]
    register_length_formula: str
    padding: str
    example_layout: dict[str, int | str]
    stage_nodes: dict[str, int]


def compile_full(m: QtmSpec) -> CompileArtifact:
    """Compile a checked machine; CheckFailed when it is not well-formed."""
    diagnostics = check_wellformed(m) + check_shape(m)
    if has_errors(diagnostics):
        first = next(d for d in diagnostics if d.severity is Severity.ERROR)
        raise CheckFailed(f"machine is not well-formed: {first.path}: {first.message}")

    init = compile_initializer(m)
    step = compile_step(m)
    loop = compile_loop(step)
    output = compile_output(m)
    artifact = CompileArtifact(
        init_term=init,
        step_term=step,
        loop_term=loop,
        output_term=output,
        decode_output_term=compile_decode(),
        full_term=in_order([init, loop, output]),
    )
    for stage, term in artifact.stages().items():
        problems = validate(term)
        if problems:
            raise InvalidTerm(problems)
        logger.debug(f"stage {stage.value}: {dc(term).dag_total} distinct nodes")
    logger.info(f"compiled machine with state_bits={m.state_bits}")
    return artifact


def manifest(m: QtmSpec, artifact: CompileArtifact) -> CompileManifest:
    return CompileManifest(
        state_bits=m.state_bits,
        time_bound=list(m.time_bound),
        register_length_formula=artifact.register_length_formula,
        padding="|0^{2P} 11> |0^{4P+4}> |1> |0^{8P+l+3-n} 1 x>, P = p(n)",
        example_layout=layout_for(m, 1).describe(),
        stage_nodes={stage.value: dc(term).dag_total for stage, term in artifact.stages().items()},
    )


def write_artifact(m: QtmSpec, artifact: CompileArtifact, paths: ArtifactPaths) -> None:
    paths.ensure_dirs()
    for stage, term in artifact.stages().items():
        write_term(paths.term_path(stage), term)
    with open(paths.manifest_path, "w") as f:
        json.dump(manifest(m, artifact).model_dump(), f, indent=2, ensure_ascii=False)
        f.write("\n")
    logger.info(f"wrote compiled stages to {paths.base_dir}")


def read_artifact(paths: ArtifactPaths) -> CompileArtifact:
    terms = {stage: read_term(paths.term_path(stage)) for stage in Stage}
    return CompileArtifact.from_stages(terms)


def reparsed(artifact: CompileArtifact) -> CompileArtifact:
    """The artifact as it reads back from the term text format."""
    terms = {stage: parse_term(format_term(term)) for stage, term in artifact.stages().items()}
    return CompileArtifact.from_stages(terms)
