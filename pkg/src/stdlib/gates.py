"""Elementary gates built from the initial functions."""

import math

from src.calculus.terms import Branch, Compo, Id, Not, Phase, Rot, Term
from src.models.errors import UnknownGate

PARAMETERIZED_GATES = ["z1", "zrot", "gps", "cphase"]
GATE_NAMES = ["cnot", "wh"] + PARAMETERIZED_GATES


def cnot() -> Term:
    return Branch(Id(), Not())


def wh() -> Term:
    # ROT first, then NOT; the other order gives (1/sqrt2)[[-1,1],[1,1]]
    return Compo(Not(), Rot(math.pi / 4))


def z1(theta: float) -> Term:
    """e^{i theta} on |0>, identity on |1>."""
    return Compo(Not(), Compo(Phase(theta), Not()))


def gps(theta: float) -> Term:
    """Global phase e^{i theta}."""
    return Compo(z1(theta), Phase(theta))


def zrot(theta: float) -> Term:
    """e^{i theta} on |0>, e^{-i theta} on |1>."""
    return Compo(z1(theta), Phase(-theta))


def cphase(theta: float) -> Term:
    """diag(1, 1, 1, e^{i theta}) on the first two qubits."""
    return Branch(Id(), Phase(theta))


def basic_gate(name: str, theta: float | None = None) -> Term:
    """Build a named gate; z1, zrot, gps and cphase take an angle."""
    if name == "cnot":
        return cnot()
    if name == "wh":
        return wh()
    builders = {"z1": z1, "zrot": zrot, "gps": gps, "cphase": cphase}
    if name not in builders:
        raise UnknownGate(f"unknown gate {name!r}; expected one of {', '.join(GATE_NAMES)}")
    if theta is None:
        raise ValueError(f"gate {name!r} needs an angle")
    return builders[name](theta)
