from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional

import yaml


@dataclass(frozen=True)
class SuiteEntry:
    test_id: int
    nodes: int
    edges: int
    comment: Optional[str] = None


@dataclass(frozen=True)
class SuiteConfig:
    name: str
    base_seed: int
    weight_low: float
    weight_high: float
    entries: List[SuiteEntry]

    def select(self, test_ids: Optional[Iterable[int]] = None) -> "SuiteConfig":
        if test_ids is None:
            return self
        wanted = set(test_ids)
        unknown = wanted - {e.test_id for e in self.entries}
        if unknown:
            raise ValueError(f"Unknown test ids for suite '{self.name}': {sorted(unknown)}")
        return SuiteConfig(
            name=self.name,
            base_seed=self.base_seed,
            weight_low=self.weight_low,
            weight_high=self.weight_high,
            entries=[e for e in self.entries if e.test_id in wanted],
        )


def parse_test_ids(raw) -> List[int]:
    """Accept 7, [1, 2], or range strings such as "1-10,42"."""
    if raw is None:
        raise ValueError("Test id selection is required.")
    if isinstance(raw, bool):
        raise TypeError(f"Unsupported test id type: {type(raw)}")
    if isinstance(raw, int):
        return [raw]
    if isinstance(raw, list):
        ids: List[int] = []
        for item in raw:
            ids.extend(parse_test_ids(item))
        return sorted(set(ids))
    if isinstance(raw, str):
        ids = []
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part:
                start_str, end_str = part.split("-", 1)
                start = int(start_str)
                end = int(end_str)
                if start > end:
                    raise ValueError(f"Invalid test id range '{part}' (start > end).")
                ids.extend(range(start, end + 1))
            else:
                ids.append(int(part))
        return sorted(set(ids))
    raise TypeError(f"Unsupported test id type: {type(raw)}")


def _load_yaml(path: Path) -> dict:
    with path.open("r", encoding="utf-8") as fh:
        return yaml.safe_load(fh) or {}


def load_suite_config(path: Path) -> SuiteConfig:
    cfg = _load_yaml(Path(path))

    graphs = cfg.get("graphs")
    if not graphs:
        raise ValueError("suite config requires a 'graphs' list.")

    entries: List[SuiteEntry] = []
    seen = set()
    for item in graphs:
        test_id = item.get("id")
        if test_id is None:
            raise ValueError(f"Suite entry {item!r} is missing 'id'.")
        if test_id in seen:
            raise ValueError(f"Suite test id {test_id} appears more than once.")
        seen.add(test_id)
        nodes, edges = int(item.get("nodes", 0)), int(item.get("edges", -1))
        if nodes <= 0:
            raise ValueError(f"Suite entry {test_id} needs a positive 'nodes' count.")
        if not 0 <= edges <= nodes * (nodes - 1) // 2:
            raise ValueError(f"Suite entry {test_id}: {edges} edges do not fit on {nodes} nodes.")
        entries.append(SuiteEntry(test_id=int(test_id), nodes=nodes, edges=edges, comment=item.get("comment")))

    weights = cfg.get("weights", {})
    return SuiteConfig(
        name=cfg.get("name", Path(path).stem),
        base_seed=int(cfg.get("base_seed", 0)),
        weight_low=float(weights.get("low", 0.1)),
        weight_high=float(weights.get("high", 100.0)),
        entries=sorted(entries, key=lambda e: e.test_id),
    )
