"""Exact, greedy, composed and brute-force solvers."""

from .exact import solve_amisl, solve_amisl_mwis, solve_mwis
from .greedy import ScopeKind, SelectorKind, solve_composed, solve_greedy
from .oracle import OracleConfig, oracle_amis, oracle_mwis

__all__ = [
    "solve_mwis",
    "solve_amisl",
    "solve_amisl_mwis",
    "solve_greedy",
    "solve_composed",
    "SelectorKind",
    "ScopeKind",
    "OracleConfig",
    "oracle_mwis",
    "oracle_amis",
]
