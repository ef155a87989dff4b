"""Register layout of compiled machines.

For input length n, time bound P = p(n) and ``state_bits`` l the register is

    |0^{2P} 11> |0^{4P+4}> |1> |0^{8P+l+3-n} 1 x>

a step counter with one 2-bit slot per step closed by 11, the output area,
a marker, and the configuration area, which is exactly as long as a
configuration code.
"""

from dataclasses import dataclass

from src.models.constants import TILDE_END
from src.qstate.state import State, from_amplitudes
from src.qtm.codec import code_length
from src.qtm.machine import QtmSpec

REGISTER_LENGTH_FORMULA = "14·p(n) + ℓ + 11"

SLOT_BITS = 2


@dataclass(frozen=True)
class RegisterLayout:
    state_bits: int
    p_n: int
    n: int

    @property
    def counter_length(self) -> int:
        return SLOT_BITS * self.p_n + len(TILDE_END)

    @property
    def output_length(self) -> int:
        return 4 * self.p_n + 4

    @property
    def code_length(self) -> int:
        return code_length(self.state_bits, self.p_n)

    @property
    def register_length(self) -> int:
        return self.counter_length + self.output_length + 1 + self.code_length

    @property
    def config_offset(self) -> int:
        """Start of the configuration code after the initializer and the loop."""
        return self.counter_length + self.output_length + 1

    @property
    def final_config_offset(self) -> int:
        """Start of the configuration code after the output stage."""
        return SLOT_BITS * (self.p_n + 1) + 1

    def padding(self) -> str:
        return "0" * (self.code_length - 1 - self.n)

    def describe(self) -> dict[str, int | str]:
        return {
            "formula": REGISTER_LENGTH_FORMULA,
            "p_n": self.p_n,
            "counter": self.counter_length,
            "output_area": self.output_length,
            "marker": 1,
            "config_area": self.code_length,
            "register_length": self.register_length,
        }


def layout_for(m: QtmSpec, n: int) -> RegisterLayout:
    if n < 1:
        raise ValueError("compiled machines need an input of length at least 1")
    p_n = m.p(n)
    if p_n < n:
        raise ValueError(f"time bound p({n}) = {p_n} is smaller than the input length")
    return RegisterLayout(m.state_bits, p_n, n)


def build_input(m: QtmSpec, x: str) -> str:
    """Padded basis register for input x."""
    layout = layout_for(m, len(x))
    counter = "0" * (SLOT_BITS * layout.p_n) + TILDE_END
    return counter + "0" * layout.output_length + "1" + layout.padding() + "1" + x


def input_state(m: QtmSpec, phi: State) -> State:
    """Padded register for a superposition of inputs of one length."""
    amplitudes = {build_input(m, x): a for x, a in phi.items()}
    return from_amplitudes(layout_for(m, phi.register_length).register_length, amplitudes)
