#!/usr/bin/env python3
"""
Configuration classes for solver and pipeline
"""

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000
DEFAULT_ORDER_CAP = 2_000_000


@dataclass
class SolverConfig:
    """Limits for the exhaustive searches"""
    # Nodes visited by the cycle-space search before BudgetExceeded
    budget: int = DEFAULT_BUDGET

    # Maximum number of group elements enumerated by closure
    order_cap: int = DEFAULT_ORDER_CAP

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError(f"budget must be positive, got {self.budget}")
        if self.order_cap < 1:
            raise ValueError(f"order_cap must be positive, got {self.order_cap}")


@dataclass
class PipelineConfig:
    """Configuration for the three-flow pipeline"""
    # Use the generic solver when the group hypotheses fail
    fallback: bool = False

    # Refuse inputs that miss any hypothesis of the theorem, even when a
    # shortcut (even valency) would still produce a flow
    strict: bool = False

    solver: SolverConfig = field(default_factory=SolverConfig)


def load_config_from_file(config_path: str = "nzflow.json") -> dict:
    """Load configuration from JSON file"""
    if not os.path.exists(config_path):
        logger.debug(f"Config file {config_path} not found. Using defaults.")
        return {}

    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = json.load(f)
            logger.info(f"Configuration loaded from {config_path}")
            return config
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in {config_path}: {e}. Using defaults.")
        return {}


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return None


def create_solver_config_from_dict(config_dict: dict) -> SolverConfig:
    """Create SolverConfig from dictionary, then apply NZFLOW_* environment overrides"""
    budget = config_dict.get('budget', DEFAULT_BUDGET)
    order_cap = config_dict.get('order_cap', DEFAULT_ORDER_CAP)

    env_budget = _env_int('NZFLOW_BUDGET')
    if env_budget is not None:
        budget = env_budget
    env_cap = _env_int('NZFLOW_ORDER_CAP')
    if env_cap is not None:
        order_cap = env_cap

    return SolverConfig(budget=budget, order_cap=order_cap)


def create_pipeline_config_from_dict(config_dict: dict) -> PipelineConfig:
    """Create PipelineConfig from dictionary"""
    return PipelineConfig(
        fallback=bool(config_dict.get('fallback', False)),
        strict=bool(config_dict.get('strict', False)),
        solver=create_solver_config_from_dict(config_dict.get('solver', config_dict)),
    )
