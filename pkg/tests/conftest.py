"""Shared pytest fixtures for all tests."""

from pathlib import Path

import numpy as np
import pytest

from src.calculus.evaluator import Evaluator
from src.qtm.machine import QtmSpec, load_spec

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Rotation followed by a phase, all moves stationary
MIXER_SPEC = """\
state_bits 1
time_bound 1
delta 0 0 -> (1 0 N) amp cos(pi/5) + (1 1 N) amp sin(pi/5)
delta 0 1 -> (1 0 N) amp -sin(pi/5) + (1 1 N) amp cos(pi/5)
delta 0 b -> (1 b N) amp 1
delta 1 0 -> (0 0 N) amp exp(ipi/3)
delta 1 1 -> (0 1 N) amp 1
delta 1 b -> (0 b N) amp -1
"""


# ============================================================================
# BUNDLED DATA
# ============================================================================


@pytest.fixture
def data_dir() -> Path:
    """Root of the bundled machines, terms and states."""
    return DATA_DIR


def machine(name: str) -> QtmSpec:
    return load_spec(DATA_DIR / "machines" / f"{name}.qtm")


@pytest.fixture
def identity_machine() -> QtmSpec:
    """One N step that leaves the tape alone (state_bits 1, p(n) = n)."""
    return machine("identity")


@pytest.fixture
def not_machine() -> QtmSpec:
    """Flips the start cell (state_bits 1, p(n) = n)."""
    return machine("not")


@pytest.fixture
def rotation_machine() -> QtmSpec:
    """pi/4 rotation of the start cell (state_bits 2, p(n) = n + 2)."""
    return machine("rotation")


@pytest.fixture
def shuttle_machine() -> QtmSpec:
    """Moves right, back left, then halts (state_bits 2, p(n) = n + 2)."""
    return machine("shuttle")


# ============================================================================
# EVALUATION
# ============================================================================


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every run draws the same terms and states."""
    return np.random.default_rng(20240611)


@pytest.fixture
def evaluator() -> Evaluator:
    return Evaluator()


def random_unitary(rng: np.random.Generator, size: int) -> np.ndarray:
    """Haar-style unitary from the QR decomposition of a complex Gaussian matrix."""
    z = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
