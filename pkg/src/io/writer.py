"""CSV writing utilities."""

import os

import polars as pl

from src.io.logging import get_logger
from src.io.paths import ArtifactPaths

logger = get_logger(__name__)


class ReportWriter:
    """
    Writes verification and complexity tables to CSV files.

    Floats are written with a fixed number of decimals so reruns diff cleanly.
    """

    def __init__(self, paths: ArtifactPaths, float_precision: int = 9):
        """
        Initialize writer with the artifact layout.

        Args:
            paths: Artifact directory layout
            float_precision: Number of decimal places for floats
        """
        self.paths = paths
        self.float_precision = float_precision

    def write_verify(self, frame: pl.DataFrame, x: str) -> str:
        """Write the per-output probability table of one verify run."""
        self.paths.ensure_dirs()
        path = self.paths.report_path(x)
        return self.write(frame, path)

    def write(self, frame: pl.DataFrame, path: str) -> str:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        frame.write_csv(path, float_precision=self.float_precision)
        logger.info(f"Saved {frame.height} rows to {path}")
        return path
