"""Name table for the ``mk`` command."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from src.calculus.terms import Term
from src.calculus.textio import parse_angle, read_term
from src.models.errors import UnknownGate
from src.stdlib.control import prefix_skip
from src.stdlib.copying import copy2
from src.stdlib.fourier import qft
from src.stdlib.gates import cnot, cphase, gps, wh, z1, zrot
from src.stdlib.rearrange import length_guard, remove_k, rep_k, reverse, swap_k


@dataclass(frozen=True)
class Constructor:
    usage: str  # argument names, shown in help
    build: Callable[[Sequence[str]], Term]


def _natural(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text!r}")
    return value


def _nullary(fn: Callable[[], Term]) -> Callable[[Sequence[str]], Term]:
    return lambda args: fn()


def _angle(fn: Callable[[float], Term]) -> Callable[[Sequence[str]], Term]:
    return lambda args: fn(parse_angle(args[0]))


def _count(fn: Callable[[int], Term]) -> Callable[[Sequence[str]], Term]:
    return lambda args: fn(_natural(args[0]))


def _count_and_term(fn: Callable[[Term, int], Term]) -> Callable[[Sequence[str]], Term]:
    return lambda args: fn(read_term(args[1]), _natural(args[0]))


CONSTRUCTORS: dict[str, Constructor] = {
    "cnot": Constructor("", _nullary(cnot)),
    "wh": Constructor("", _nullary(wh)),
    "z1": Constructor("THETA", _angle(z1)),
    "zrot": Constructor("THETA", _angle(zrot)),
    "gps": Constructor("THETA", _angle(gps)),
    "cphase": Constructor("THETA", _angle(cphase)),
    "remove": Constructor("K", _count(remove_k)),
    "rep": Constructor("K", _count(rep_k)),
    "swapk": Constructor("K", _count(swap_k)),
    "reverse": Constructor("", _nullary(reverse)),
    "qft": Constructor("K", _count(qft)),
    "copy2": Constructor("", _nullary(copy2)),
    "prefix-skip": Constructor("K TERM_FILE", _count_and_term(prefix_skip)),
    "length-guard": Constructor(
        "K TERM_FILE", lambda args: length_guard(_natural(args[0]), read_term(args[1]))
    ),
}


def make(name: str, args: Sequence[str]) -> Term:
    """Build the named constructor from its command-line arguments."""
    if name not in CONSTRUCTORS:
        raise UnknownGate(f"unknown constructor {name!r}; expected one of {', '.join(CONSTRUCTORS)}")
    constructor = CONSTRUCTORS[name]
    expected = len(constructor.usage.split())
    if len(args) != expected:
        usage = f"{name} {constructor.usage}".strip()
        raise ValueError(f"usage: mk {usage}")
    return constructor.build(args)
