from pathlib import Path
from typing import Optional, Tuple

import duckdb
import yaml

from src.utils.env import env_path, load_env, project_root

load_env()


def get_paths() -> Tuple[Path, Path]:
    data_root = env_path("MWIS_DATA_ROOT", "./data")
    dbpath = env_path("MWIS_RESULTS_DB", "./data/results/bench.duckdb")
    dbpath.parent.mkdir(parents=True, exist_ok=True)
    return data_root, dbpath


def connect_duckdb(dbpath: Path):
    return duckdb.connect(str(dbpath))


def load_registry(path: Optional[Path] = None) -> dict:
    path = path or project_root() / "config" / "algorithm_registry.yml"
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)
