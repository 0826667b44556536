"""
Run configuration: verify_config.json if present, otherwise TAFT_VERIFY_*
environment variables (usually loaded from config.env).
"""
from dataclasses import dataclass
from typing import Any, Dict
import json
import logging
import os
import random

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    "jobs": 1,
    "format": "json",
    "roots": "canonical",
    "seed": 20240,
    "sample_pairs": 24,
    "full_sweep_max_n": 6,
    "dual_max_n": 6,
    "log_level": "INFO",
}

ENV_VARS = {
    "jobs": ("TAFT_VERIFY_JOBS", int),
    "format": ("TAFT_VERIFY_FORMAT", str),
    "roots": ("TAFT_VERIFY_ROOTS", str),
    "seed": ("TAFT_VERIFY_SEED", int),
    "sample_pairs": ("TAFT_VERIFY_SAMPLE_PAIRS", int),
    "full_sweep_max_n": ("TAFT_VERIFY_FULL_SWEEP_MAX_N", int),
    "dual_max_n": ("TAFT_VERIFY_DUAL_MAX_N", int),
    "log_level": ("TAFT_VERIFY_LOG_LEVEL", str),
}


def load_environment() -> bool:
    """Load config.env (or TAFT_VERIFY_ENV_FILE) into the process environment"""
    env_file = os.getenv("TAFT_VERIFY_ENV_FILE", "config.env")
    loaded = load_dotenv(env_file)
    logger.debug(f"Environment file {env_file}: {'loaded' if loaded else 'not found'}")
    return loaded


def _coerce(key: str, raw: Any) -> Any:
    _, cast = ENV_VARS[key]
    try:
        return cast(raw)
    except (TypeError, ValueError):
        logger.warning(f"Invalid value {raw!r} for {key}, using default {DEFAULTS[key]!r}")
        return DEFAULTS[key]


def load_verify_config(path: str = "verify_config.json") -> Dict[str, Any]:
    """Load verification configuration"""
    config = dict(DEFAULTS)
    try:
        if os.path.exists(path):
            with open(path, "r") as f:
                data = json.load(f)
            for key, value in data.items():
                if key in ENV_VARS:
                    config[key] = _coerce(key, value)
                else:
                    logger.warning(f"Ignoring unknown config key {key!r} in {path}")
        else:
            logger.debug(f"{path} not found. Using environment variables.")
            for key, (var, _) in ENV_VARS.items():
                raw = os.getenv(var)
                if raw is not None:
                    config[key] = _coerce(key, raw)
    except Exception as e:
        logger.error(f"Error loading verify config: {e}")
        return dict(DEFAULTS)
    return config


@dataclass(frozen=True)
class SuiteSettings:
    """The knobs a suite run depends on; picklable for worker processes"""
    seed: int = DEFAULTS["seed"]
    sample_pairs: int = DEFAULTS["sample_pairs"]
    full_sweep_max_n: int = DEFAULTS["full_sweep_max_n"]
    dual_max_n: int = DEFAULTS["dual_max_n"]

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SuiteSettings":
        return cls(
            seed=config.get("seed", DEFAULTS["seed"]),
            sample_pairs=config.get("sample_pairs", DEFAULTS["sample_pairs"]),
            full_sweep_max_n=config.get("full_sweep_max_n", DEFAULTS["full_sweep_max_n"]),
            dual_max_n=config.get("dual_max_n", DEFAULTS["dual_max_n"]),
        )

    def rng_for(self, suite: str, n: int) -> random.Random:
        # independent of the root exponent, so every root sees the same sample
        return random.Random(f"{self.seed}:{suite}:{n}")
