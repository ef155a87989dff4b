"""Output path configuration for compile and verify runs."""

import os
from enum import Enum

from pydantic import BaseModel


class Stage(str, Enum):
    """Terms written by ``qtm compile``."""

    INIT = "init"
    STEP = "step"
    LOOP = "loop"
    OUTPUT = "output"
    DECODE = "decode"
    FULL = "full"


class ArtifactPaths(BaseModel):
    """
    Layout of a compile output directory:
    - {base_dir}/<stage>.term for every stage
    - {base_dir}/manifest.json
    - {base_dir}/reports/verify_<input>.csv
    """

    base_dir: str

    @classmethod
    def from_spec_path(cls, spec_path: str, out_dir: str | None = None) -> "ArtifactPaths":
        """Default directory next to the working directory, named after the spec file."""
        if out_dir:
            return cls(base_dir=out_dir)
        base_name = os.path.splitext(os.path.basename(spec_path))[0]
        return cls(base_dir=f"{base_name}_compiled")

    def term_path(self, stage: Stage) -> str:
        return os.path.join(self.base_dir, f"{stage.value}.term")

    @property
    def manifest_path(self) -> str:
        return os.path.join(self.base_dir, "manifest.json")

    @property
    def reports_dir(self) -> str:
        return os.path.join(self.base_dir, "reports")

    def report_path(self, x: str) -> str:
        return os.path.join(self.reports_dir, f"verify_{x or 'empty'}.csv")

    def ensure_dirs(self) -> None:
        os.makedirs(self.base_dir, exist_ok=True)
        os.makedirs(self.reports_dir, exist_ok=True)
