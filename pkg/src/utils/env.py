"""Locate the project root and load its .env. Call load_env() at application startup."""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

_MARKERS = ("pyproject.toml", ".env")


@lru_cache(maxsize=1)
def project_root() -> Path:
    """Walk up from this file to the first directory holding pyproject.toml or .env."""
    path = Path(__file__).resolve().parent
    for _ in range(5):
        if any((path / marker).exists() for marker in _MARKERS):
            return path
        if path.parent == path:
            break
        path = path.parent
    return Path.cwd()


def load_env() -> bool:
    """Idempotent. Returns True if a .env file was found and loaded.

    Variables already set in the process environment win over the file.
    """
    return load_dotenv(dotenv_path=project_root() / ".env", override=False)


def env_path(name: str, default: str) -> Path:
    """Path from an environment variable; relative values resolve against the project root."""
    raw = Path(os.getenv(name, default)).expanduser()
    return raw if raw.is_absolute() else (project_root() / raw).resolve()
