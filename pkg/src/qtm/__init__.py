"""Single-tape quantum Turing machines."""
