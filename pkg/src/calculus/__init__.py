"""Term IR, evaluation and term-level analyses."""
