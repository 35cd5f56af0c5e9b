"""
Run Configuration
The packaged suite catalogue and the per-run settings layered on top of it
"""
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional
import json
import logging
import os

from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

DEFAULT_CATALOGUE = Path(__file__).resolve().parent.parent / "config" / "verification.json"
SEED_ENV = "SKEWDUAL_SEED"


def load_catalogue(config_path: Optional[str] = None) -> Dict[str, Any]:
    path = Path(config_path) if config_path else DEFAULT_CATALOGUE
    with open(path, "r") as f:
        return json.load(f)


def suite_ids(catalogue: Dict[str, Any]) -> List[str]:
    return [suite["id"] for suite in catalogue.get("suites", [])]


class RunConfig(BaseModel):
    """Seed, output format and sample counts for one invocation"""
    seed: int = 0
    output: Literal["json", "table"] = "json"
    samples: Dict[str, int] = Field(default_factory=dict)
    fail_fast: bool = False

    @field_validator("seed")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"seed must be non-negative, got {value}")
        return value

    def sample_count(self, key: str) -> int:
        return int(self.samples.get(key, 1))


def resolve_run_config(
    catalogue: Dict[str, Any],
    seed: Optional[int] = None,
    output: str = "json",
    samples: Optional[Dict[str, int]] = None,
    fail_fast: Optional[bool] = None,
) -> RunConfig:
    """Catalogue defaults, then SKEWDUAL_SEED, then explicit arguments"""
    defaults = catalogue.get("config", {})
    resolved_seed = defaults.get("default_seed", 0)
    env_seed = os.environ.get(SEED_ENV)
    if env_seed is not None and env_seed.strip():
        resolved_seed = int(env_seed)
        logger.debug(f"Seed {resolved_seed} taken from {SEED_ENV}")
    if seed is not None:
        resolved_seed = seed

    counts = dict(defaults.get("samples", {}))
    counts.update(samples or {})
    return RunConfig(
        seed=resolved_seed,
        output=output,
        samples=counts,
        fail_fast=defaults.get("fail_fast", False) if fail_fast is None else fail_fast,
    )
