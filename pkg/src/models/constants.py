"""Constants shared by the state, calculus, QTM and compiler modules."""

import math

# ============================================================================
# NUMERIC TOLERANCES
# ============================================================================

PRUNE_EPSILON = 1e-14  # Amplitudes below this magnitude are dropped
DENSE_SIZE_CAP = 12  # Largest register densify/matrix_of will materialize
UNIT_TOLERANCE = 1e-10  # Well-formedness and gadget synthesis tolerance
TWO_PI = 2.0 * math.pi

# Python's default limit is too small for deep KQRec unwinding on long registers
RECURSION_LIMIT = 20000


# ============================================================================
# TERM CONSTRUCTORS
# ============================================================================

# Constructor names as they appear in the term text format and dc reports
CONSTRUCTOR_NAMES = [
    "i",
    "not",
    "phase",
    "rot",
    "swap",
    "meas",
    "crot",
    "compo",
    "switch",
    "branch",
    "kqrec",
]


# ============================================================================
# QTM CODING
# ============================================================================

BLANK = "b"
TAPE_ALPHABET = ["0", "1", BLANK]
DIRECTIONS = {"L": -1, "N": 0, "R": 1}

# Each tape cell is coded as a 4-bit block: head marker then symbol
HEAD_MARKER = "11"
NO_HEAD_MARKER = "10"
SYMBOL_CODES = {"0": "00", "1": "01", BLANK: "10"}
CODE_SYMBOLS = {code: symbol for symbol, code in SYMBOL_CODES.items()}
CELL_BITS = 4

# Tilde code: each output bit s becomes the pair 0s, terminated by 11
TILDE_END = "11"
