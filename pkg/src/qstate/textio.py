"""State text format.

    qubits <n>
    <bitstring> <re> <im>

One entry per line in lexicographic order. The length-0 key is written as
``-``. Reals use Python's shortest round-trip repr.
"""

from src.models.errors import ParseError
from src.qstate.state import State, from_amplitudes

EMPTY_KEY = "-"


def format_real(x: float) -> str:
    # "+ 0.0" folds negative zero
    return repr(float(x) + 0.0)


def format_state(phi: State) -> str:
    lines = [f"qubits {phi.register_length}"]
    for key, amp in phi.items():
        lines.append(
            f"{key or EMPTY_KEY} {format_real(amp.real)} {format_real(amp.imag)}"
        )
    return "\n".join(lines) + "\n"


def parse_state(text: str) -> State:
    rows = [line.split() for line in text.splitlines()]
    rows = [row for row in rows if row and not row[0].startswith("#")]
    if not rows or rows[0][0] != "qubits" or len(rows[0]) != 2:
        raise ParseError("state file must start with 'qubits <n>'")
    try:
        n = int(rows[0][1])
    except ValueError as e:
        raise ParseError(f"bad qubit count {rows[0][1]!r}") from e

    amplitudes: dict[str, complex] = {}
    for row in rows[1:]:
        if len(row) != 3:
            raise ParseError(f"expected '<bits> <re> <im>', got {' '.join(row)!r}")
        key = "" if row[0] == EMPTY_KEY else row[0]
        if len(key) != n or any(c not in "01" for c in key):
            raise ParseError(f"bad basis string {row[0]!r} for {n} qubits")
        try:
            value = complex(float(row[1]), float(row[2]))
        except ValueError as e:
            raise ParseError(f"bad amplitude on line {' '.join(row)!r}") from e
        amplitudes[key] = amplitudes.get(key, 0j) + value
    return from_amplitudes(n, amplitudes)


def read_state(path: str) -> State:
    with open(path) as f:
        return parse_state(f.read())


def write_state(path: str, phi: State) -> None:
    with open(path, "w") as f:
        f.write(format_state(phi))
