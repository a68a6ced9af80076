"""Pydantic configuration models, validated at startup."""

import logging
import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError

from bounds.config import BoundsConfig
from common.errors import InvalidArgumentError
from covers.config import SolverConfig
from partitions.config import PartitionsConfig

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "SCC_LAB_BUDGET"


class ExperimentConfig(BaseModel):
    # K_t(d) instances with t*d above these sizes skip the exact solver / greedy cover
    exact_limit_n: int = Field(default=8, ge=1)
    greedy_limit_n: int = Field(default=16, ge=1)
    # largest ground set the n search for a random family may try
    max_ground_n: int = Field(default=256, ge=2)
    use_mols: bool = False


class LabConfig(BaseModel):
    solver: SolverConfig = Field(default_factory=SolverConfig)
    bounds: BoundsConfig = Field(default_factory=BoundsConfig)
    partitions: PartitionsConfig = Field(default_factory=PartitionsConfig)
    experiment: ExperimentConfig = Field(default_factory=ExperimentConfig)


def default_config_path() -> Path:
    return Path(__file__).parent.parent / "config" / "lab_config.yaml"


def load_config(path: str | Path | None = None) -> LabConfig:
    """Read the lab YAML; without an explicit path a missing default file means built-in defaults."""
    explicit = path is not None
    path = Path(path) if explicit else default_config_path()
    if path.exists():
        with open(path, "r") as f:
            raw = yaml.safe_load(f) or {}
    elif explicit:
        raise FileNotFoundError(f"Config file not found: {path}")
    else:
        logger.debug("[CONFIG] %s not found, using built-in defaults", path)
        raw = {}

    budget = os.environ.get(BUDGET_ENV_VAR)
    if budget is not None:
        try:
            raw.setdefault("partitions", {})["enumeration_budget"] = int(budget)
        except ValueError:
            raise InvalidArgumentError(f"{BUDGET_ENV_VAR} must be an integer, got {budget!r}")

    try:
        return LabConfig(**raw)
    except ValidationError as e:
        raise InvalidArgumentError(f"invalid config {path}: {e}") from e
