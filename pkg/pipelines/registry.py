from functools import partial
from importlib import import_module
from typing import Callable, List, Optional, Tuple

from .common import load_registry

ALL_ALGORITHMS = [f"A{i}" for i in range(1, 9)]


def get_algorithm(alg_id: str, registry: Optional[dict] = None) -> dict:
    reg = registry or load_registry()
    alg = reg["algorithms"].get(alg_id.upper())
    if not alg:
        raise ValueError(f"Unknown algorithm: {alg_id}")
    return alg


def get_solver(alg_id: str, registry: Optional[dict] = None) -> Tuple[Callable, dict]:
    """Resolve an algorithm id to a callable taking (graph, [deadline=...])."""
    alg = get_algorithm(alg_id, registry)
    dotted = alg["loader"]  # "module.sub:func"
    mod_name, func_name = dotted.split(":")
    func = getattr(import_module(mod_name), func_name)
    return partial(func, **alg.get("kwargs", {})), alg


def parse_algorithms(raw: str) -> List[str]:
    """'all' or a comma list such as 'a1,a3'; returned upper-case in id order."""
    if raw.strip().lower() == "all":
        return list(ALL_ALGORITHMS)
    picked = {part.strip().upper() for part in raw.split(",") if part.strip()}
    unknown = picked - set(ALL_ALGORITHMS)
    if unknown:
        raise ValueError(f"Unknown algorithms: {sorted(unknown)}")
    return [a for a in ALL_ALGORITHMS if a in picked]
