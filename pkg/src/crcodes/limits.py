"""Size guards for enumeration-heavy operations.

Defaults follow the module contracts: full-space scans are capped at
q^n <= 2^24 vectors, syndrome spaces at q^(n-k) <= 2^25, and design
counting loops at 10^8 elementary count operations.  Every limit can be
overridden programmatically or through CRCODES_MAX_* environment
variables (picked up by the CLI).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceError

MAX_VECTORS_DEFAULT = 1 << 24
MAX_SYNDROMES_DEFAULT = 1 << 25
MAX_COUNT_OPS_DEFAULT = 10**8
MAX_ENUM_DIM_DEFAULT = 24


@dataclass(frozen=True)
class Limits:
    max_vectors: int = MAX_VECTORS_DEFAULT
    max_syndromes: int = MAX_SYNDROMES_DEFAULT
    max_count_ops: int = MAX_COUNT_OPS_DEFAULT
    max_enum_dim: int = MAX_ENUM_DIM_DEFAULT

    def check_vectors(self, total: int) -> None:
        if total > self.max_vectors:
            raise ResourceError("vector_space", f"q^n = {total} > {self.max_vectors}")

    def check_syndromes(self, total: int) -> None:
        if total > self.max_syndromes:
            raise ResourceError("syndrome_space", f"q^(n-k) = {total} > {self.max_syndromes}")

    def check_count_ops(self, total: int) -> None:
        if total > self.max_count_ops:
            raise ResourceError("count_ops", f"{total} > {self.max_count_ops}")

    def check_enum_dim(self, dim: int) -> None:
        if dim > self.max_enum_dim:
            raise ResourceError("enum_dim", f"dimension {dim} > {self.max_enum_dim}")


def from_env(env: dict | None = None) -> Limits:
    """Build Limits from CRCODES_MAX_* environment overrides."""
    env = os.environ if env is None else env

    def pick(name: str, default: int) -> int:
        raw = env.get(name)
        return default if raw is None else int(raw)

    return Limits(
        max_vectors=pick("CRCODES_MAX_VECTORS", MAX_VECTORS_DEFAULT),
        max_syndromes=pick("CRCODES_MAX_SYNDROMES", MAX_SYNDROMES_DEFAULT),
        max_count_ops=pick("CRCODES_MAX_COUNT_OPS", MAX_COUNT_OPS_DEFAULT),
        max_enum_dim=pick("CRCODES_MAX_ENUM_DIM", MAX_ENUM_DIM_DEFAULT),
    )


DEFAULT = Limits()
