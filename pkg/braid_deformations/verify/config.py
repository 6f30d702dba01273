"""
Runtime configuration of the verification harnesses.

Environment variables:

- `BRAID_WORKERS`: number of worker processes (default: all cores).
- `BRAID_CHUNK_SIZE`: digraph indices per work unit (default: 4096).
"""

import os
from typing import Optional

from pydantic import Field

from braid_deformations.objects import ImmutableModel


WORKERS_ENV = "BRAID_WORKERS"
CHUNK_SIZE_ENV = "BRAID_CHUNK_SIZE"


def _default_workers() -> int:
    return os.cpu_count() or 1


class HarnessConfig(ImmutableModel):
    workers: int = Field(default_factory=_default_workers, ge=1)
    chunk_size: int = Field(4096, ge=1)
    progress: bool = Field(False, description="Show a progress bar over work chunks.")

    @classmethod
    def from_env(
        cls,
        workers: Optional[int] = None,
        chunk_size: Optional[int] = None,
        progress: bool = False,
    ):
        """Read the environment; explicit arguments win over it."""
        values: dict = {"progress": progress}
        env_workers = os.environ.get(WORKERS_ENV)
        env_chunk_size = os.environ.get(CHUNK_SIZE_ENV)
        if workers is not None:
            values["workers"] = workers
        elif env_workers:
            values["workers"] = env_workers
        if chunk_size is not None:
            values["chunk_size"] = chunk_size
        elif env_chunk_size:
            values["chunk_size"] = env_chunk_size
        return cls(**values)


__all__ = [
    "WORKERS_ENV",
    "CHUNK_SIZE_ENV",
    "HarnessConfig",
]
