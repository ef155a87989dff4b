"""Run configuration from the environment and command-line flags."""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from src.models.constants import DENSE_SIZE_CAP, PRUNE_EPSILON


def _flag(value: str | None) -> bool:
    return (value or "").strip().lower() in {"1", "true", "yes", "on"}


class RunConfig(BaseModel):
    """Settings shared by every subcommand; CLI flags override the environment."""

    seed: int = 0
    enable_crot: bool = False
    prune_epsilon: float = Field(default=PRUNE_EPSILON, gt=0)
    dense_cap: int = Field(default=DENSE_SIZE_CAP, ge=1)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "RunConfig":
        """Read QPC_* variables, loading a .env file first if there is one."""
        load_dotenv()
        values: dict[str, object] = {}
        if os.getenv("QPC_SEED"):
            values["seed"] = int(os.environ["QPC_SEED"])
        if os.getenv("QPC_ENABLE_CROT") is not None:
            values["enable_crot"] = _flag(os.getenv("QPC_ENABLE_CROT"))
        if os.getenv("QPC_PRUNE_EPSILON"):
            values["prune_epsilon"] = float(os.environ["QPC_PRUNE_EPSILON"])
        if os.getenv("QPC_LOG_LEVEL"):
            values["log_level"] = os.environ["QPC_LOG_LEVEL"]
        return cls(**values)

    def with_overrides(self, **overrides) -> "RunConfig":
        """Copy with every non-None override applied."""
        return self.model_copy(update={k: v for k, v in overrides.items() if v is not None})
