from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import yaml

from src.utils.env import project_root


@dataclass(frozen=True)
class GeneratorDefaults:
    weight_low: float = 0.1
    weight_high: float = 100.0


@dataclass(frozen=True)
class BenchDefaults:
    budget_seconds: float = 1800.0
    workers: int = 1
    algorithms: List[str] = field(default_factory=lambda: [f"A{i}" for i in range(1, 9)])


@dataclass(frozen=True)
class Settings:
    tolerance: float = 1e-9
    oracle_max_nodes: int = 20
    generator: GeneratorDefaults = field(default_factory=GeneratorDefaults)
    bench: BenchDefaults = field(default_factory=BenchDefaults)


def settings_path() -> Path:
    configured = os.getenv("MWIS_SETTINGS")
    return Path(configured) if configured else project_root() / "config" / "settings.yml"


def _load_yaml(path: Path) -> dict:
    with path.open("r", encoding="utf-8") as fh:
        return yaml.safe_load(fh) or {}


def _positive(value, name: str, kind=float):
    try:
        value = kind(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"settings: '{name}' must be a number, got {value!r}") from exc
    if value <= 0:
        raise ValueError(f"settings: '{name}' must be positive, got {value}")
    return value


def load_settings(path: Optional[Path] = None) -> Settings:
    """Read settings.yml; a missing file yields the built-in defaults."""
    path = path or settings_path()
    if not path.exists():
        return Settings()
    cfg = _load_yaml(path)

    defaults = cfg.get("defaults", {})
    oracle = cfg.get("oracle", {})
    gen = cfg.get("generator", {})
    bench = cfg.get("bench", {})

    generator = GeneratorDefaults(
        weight_low=_positive(gen.get("weight_low", 0.1), "generator.weight_low"),
        weight_high=_positive(gen.get("weight_high", 100.0), "generator.weight_high"),
    )
    if generator.weight_low > generator.weight_high:
        raise ValueError("settings: generator.weight_low exceeds generator.weight_high")

    algorithms = bench.get("algorithms") or BenchDefaults().algorithms
    return Settings(
        tolerance=_positive(defaults.get("tolerance", 1e-9), "defaults.tolerance"),
        oracle_max_nodes=_positive(oracle.get("max_nodes", 20), "oracle.max_nodes", int),
        generator=generator,
        bench=BenchDefaults(
            budget_seconds=_positive(bench.get("budget_seconds", 1800), "bench.budget_seconds"),
            workers=_positive(bench.get("workers", 1), "bench.workers", int),
            algorithms=[str(a).upper() for a in algorithms],
        ),
    )
