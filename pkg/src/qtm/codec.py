"""Bit codes of skew configurations.

A code is the state followed by one 4-bit block per cell of the essential
region, cells -p(n) .. p(n) from left to right. Each block is a head marker
(11 on the head cell, 10 elsewhere) followed by the symbol code.
"""

from src.models.constants import (
    CELL_BITS,
    CODE_SYMBOLS,
    HEAD_MARKER,
    NO_HEAD_MARKER,
    SYMBOL_CODES,
)
from src.models.errors import InvalidCode
from src.qtm.simulator import SkewConfig, from_tape


def code_length(state_bits: int, p_n: int) -> int:
    return CELL_BITS * (2 * p_n + 1) + state_bits


def encode_config(c: SkewConfig, p_n: int) -> str:
    if c.radius != p_n:
        raise ValueError(f"configuration covers radius {c.radius}, expected {p_n}")
    blocks = []
    for cell, symbol in enumerate(c.tape, start=-p_n):
        marker = HEAD_MARKER if cell == c.h else NO_HEAD_MARKER
        blocks.append(marker + SYMBOL_CODES[symbol])
    return c.q + "".join(blocks)


def decode_config(bits: str, state_bits: int, p_n: int) -> SkewConfig:
    expected = code_length(state_bits, p_n)
    if len(bits) != expected:
        raise InvalidCode(f"code has {len(bits)} bits, expected {expected}")
    q, body = bits[:state_bits], bits[state_bits:]

    head: int | None = None
    symbols = []
    for index in range(2 * p_n + 1):
        block = body[CELL_BITS * index : CELL_BITS * (index + 1)]
        marker, code = block[:2], block[2:]
        if marker == HEAD_MARKER:
            if head is not None:
                raise InvalidCode(f"second head marker in block {index}")
            head = index - p_n
        elif marker != NO_HEAD_MARKER:
            raise InvalidCode(f"block {index} has marker {marker!r}")
        if code not in CODE_SYMBOLS:
            raise InvalidCode(f"block {index} has symbol code {code!r}")
        symbols.append(CODE_SYMBOLS[code])
    if head is None:
        raise InvalidCode("no head marker")
    return from_tape(q, head, "".join(symbols))
