"""Command-line entry point.

Usage:
    python qpc.py eval --term not.term --state one_qubit_zero.state
    python qpc.py dc --term cnot.term
    python qpc.py qtm compile --spec data/machines/not.qtm --out not_compiled
    python qpc.py qtm verify --spec data/machines/not.qtm --artifact not_compiled --input 1
"""

import argparse
import os
import sys
from collections.abc import Sequence

import polars as pl

from src.calculus.complexity import dc
from src.calculus.evaluator import Evaluator
from src.calculus.inversion import invert
from src.calculus.matrix import matrix_of
from src.calculus.properties import run_suite, to_frame
from src.calculus.textio import format_term, read_term
from src.calculus.validation import validate
from src.compiler.artifact import compile_full, read_artifact, write_artifact
from src.compiler.verify import verify_against_qtm
from src.io.config import RunConfig
from src.io.logging import configure_logging, get_logger
from src.io.paths import ArtifactPaths
from src.io.writer import ReportWriter
from src.models.errors import CheckFailed, ParseError, QpcError, UnknownGate
from src.qstate.state import basis, densify, sparsify
from src.qstate.textio import format_real, format_state, read_state
from src.qtm.machine import load_spec
from src.qtm.simulator import output_distribution, run
from src.qtm.wellformed import check_shape, check_wellformed, has_errors
from src.stdlib.registry import CONSTRUCTORS, make

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _deviation(value: float) -> str:
    return f"{value:.3e}"


def _complex_pair(value: complex) -> str:
    return f"{format_real(value.real)} {format_real(value.imag)}"


# ============================================================================
# CALCULUS COMMANDS
# ============================================================================


def cmd_eval(args: argparse.Namespace, config: RunConfig) -> None:
    term = read_term(args.term)
    phi = read_state(args.state)
    evaluator = Evaluator(enable_crot=config.enable_crot, epsilon=config.prune_epsilon)
    if args.dense:
        n = phi.register_length
        matrix = matrix_of(term, n, evaluator, cap=config.dense_cap)
        result = sparsify(matrix @ densify(phi, n, config.dense_cap), n, config.prune_epsilon)
    else:
        result = evaluator.eval(term, phi)
    sys.stdout.write(format_state(result))


def cmd_matrix(args: argparse.Namespace, config: RunConfig) -> None:
    term = read_term(args.term)
    evaluator = Evaluator(enable_crot=config.enable_crot, epsilon=config.prune_epsilon)
    matrix = matrix_of(term, args.qubits, evaluator, cap=config.dense_cap)
    for row in matrix:
        print(" ".join(_complex_pair(complex(value)) for value in row))


def cmd_invert(args: argparse.Namespace, config: RunConfig) -> None:
    print(format_term(invert(read_term(args.term))))


def cmd_dc(args: argparse.Namespace, config: RunConfig) -> None:
    report = dc(read_term(args.term))
    print(f"total {report.total}")
    print(f"dag {report.dag_total}")
    for name, count in report.to_frame().iter_rows():
        print(f"{name} {count}")


def cmd_check(args: argparse.Namespace, config: RunConfig) -> None:
    term = read_term(args.term)
    diagnostics = validate(term, enable_crot=config.enable_crot)
    if diagnostics:
        for diagnostic in diagnostics:
            print(diagnostic)
        raise CheckFailed("term is not valid")

    evaluator = Evaluator(enable_crot=config.enable_crot, epsilon=config.prune_epsilon)
    results = run_suite(term, args.qubits, seed=config.seed, trials=args.trials, evaluator=evaluator)
    table = to_frame(results)
    for name, passed, deviation, detail in table.iter_rows():
        line = f"{name} {'pass' if passed else 'FAIL'} {_deviation(deviation)}"
        print(f"{line} ({detail})" if detail else line)
    failed = table.filter(~pl.col("passed"))["property"].to_list()
    if failed:
        raise CheckFailed(f"failed: {', '.join(failed)}")


def cmd_mk(args: argparse.Namespace, config: RunConfig) -> None:
    print(format_term(make(args.name, args.args)))


# ============================================================================
# QTM COMMANDS
# ============================================================================


def cmd_qtm_check(args: argparse.Namespace, config: RunConfig) -> None:
    m = load_spec(args.spec)
    diagnostics = check_wellformed(m) + check_shape(m)
    for diagnostic in diagnostics:
        print(diagnostic)
    if has_errors(diagnostics):
        raise CheckFailed("machine is not well-formed")
    print("ok")


def cmd_qtm_run(args: argparse.Namespace, config: RunConfig) -> None:
    m = load_spec(args.spec)
    final = run(m, args.input)
    print(f"configs {len(final)}")
    for c, amp in final.items():
        print(f"{c.q} {c.h} {c.z1} {c.z2} {_complex_pair(amp)}")
    for output, probability in output_distribution(final).items():
        print(f"output {output or '-'} {format_real(probability)}")


def cmd_qtm_compile(args: argparse.Namespace, config: RunConfig) -> None:
    m = load_spec(args.spec)
    artifact = compile_full(m)
    paths = ArtifactPaths.from_spec_path(args.spec, args.out)
    write_artifact(m, artifact, paths)
    for stage in artifact.stages():
        print(f"{stage.value} {paths.term_path(stage)}")
    print(f"manifest {paths.manifest_path}")


def _verify_input(text: str):
    """A state file path, or a bitstring taken as a basis input."""
    if text.endswith(".state"):
        return read_state(text)
    if any(c not in "01" for c in text):
        raise ParseError(f"input must be a bitstring or a .state file, got {text!r}")
    return basis(text)


def cmd_qtm_verify(args: argparse.Namespace, config: RunConfig) -> None:
    m = load_spec(args.spec)
    paths = ArtifactPaths(base_dir=args.artifact)
    artifact = read_artifact(paths)
    phi = _verify_input(args.input)
    evaluator = Evaluator(enable_crot=config.enable_crot, epsilon=config.prune_epsilon)
    report = verify_against_qtm(m, artifact, phi, evaluator)

    print(f"max_prefix_dev {_deviation(report.max_prefix_dev)}")
    print(f"inner_product_dev {_deviation(report.inner_product_dev)}")
    print(f"orthogonality_residual {_deviation(report.orthogonality_residual)}")
    for output, p_sim, p_compiled, _ in report.to_frame().iter_rows():
        print(f"output {output or '-'} {p_sim:.9f} {p_compiled:.9f}")

    label = os.path.splitext(os.path.basename(args.input))[0]
    ReportWriter(paths).write_verify(report.to_frame(), label)
    if not report.passed():
        raise CheckFailed("compiled machine deviates from the simulator")
    print("passed")


# ============================================================================
# PARSER
# ============================================================================


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Seed for randomized suites")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="Logging level (default: WARNING)")
    common.add_argument(
        "--enable-crot", action="store_true", default=argparse.SUPPRESS, help="Accept the controlled-rotation gate"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qpc", description="Evaluate, check and compile quantum function terms", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="Evaluate a term on a state")
    p.add_argument("--term", required=True, help="Term file")
    p.add_argument("--state", required=True, help="State file")
    p.add_argument("--dense", action="store_true", help="Evaluate through the dense matrix")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("matrix", parents=[common], help="Print the matrix of a term, row-major re/im pairs")
    p.add_argument("--term", required=True)
    p.add_argument("--qubits", type=int, required=True)
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("invert", parents=[common], help="Print the inverse of a MEAS-free term")
    p.add_argument("--term", required=True)
    p.set_defaults(handler=cmd_invert)

    p = sub.add_parser("dc", parents=[common], help="Print node counts of a term")
    p.add_argument("--term", required=True)
    p.set_defaults(handler=cmd_dc)

    p = sub.add_parser("check", parents=[common], help="Run the linearity and unitarity checks")
    p.add_argument("--term", required=True)
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--trials", type=int, default=5, help="Random state pairs per property")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("mk", parents=[common], help="Print a library term")
    p.add_argument("name", help=f"One of: {', '.join(CONSTRUCTORS)}")
    p.add_argument("args", nargs="*")
    p.set_defaults(handler=cmd_mk)

    qtm = sub.add_parser("qtm", help="Quantum Turing machine commands")
    qtm_sub = qtm.add_subparsers(dest="qtm_command", required=True)

    p = qtm_sub.add_parser("check", parents=[common], help="Well-formedness and shape diagnostics")
    p.add_argument("--spec", required=True)
    p.set_defaults(handler=cmd_qtm_check)

    p = qtm_sub.add_parser("run", parents=[common], help="Simulate a machine on one input")
    p.add_argument("--spec", required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(handler=cmd_qtm_run)

    p = qtm_sub.add_parser("compile", parents=[common], help="Compile a machine into stage terms")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", default=None, help="Output directory (defaults to {spec_basename}_compiled)")
    p.set_defaults(handler=cmd_qtm_compile)

    p = qtm_sub.add_parser("verify", parents=[common], help="Compare a compiled machine with the simulator")
    p.add_argument("--spec", required=True)
    p.add_argument("--artifact", required=True, help="Directory written by qtm compile")
    p.add_argument("--input", required=True, help="Bitstring or .state file of inputs")
    p.set_defaults(handler=cmd_qtm_verify)

    return parser


def dispatch(argv: Sequence[str]) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = RunConfig.from_env().with_overrides(
            seed=getattr(args, "seed", None),
            log_level=getattr(args, "log_level", None),
            enable_crot=getattr(args, "enable_crot", None),
        )
        configure_logging(config.log_level)
        logger.debug(f"running {args.command} with {config}")
        args.handler(args, config)
    except CheckFailed as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ParseError, UnknownGate, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_IO
    except QpcError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK
