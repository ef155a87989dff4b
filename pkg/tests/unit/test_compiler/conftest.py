"""Compiled bundled machines shared by the compiler tests."""

from functools import cache

from src.compiler.artifact import CompileArtifact, compile_full
from tests.conftest import machine


@cache
def compiled(name: str) -> CompileArtifact:
    """Compile a bundled machine once per test session."""
    return compile_full(machine(name))
