"""Explicit work bounds.

Every enumeration in the library checks its worst-case size against a
:class:`Budget` before starting and raises
:class:`~cyclocover.errors.ResourceExceeded` instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceExceeded


@dataclass(frozen=True)
class Budget:
    #: largest field order q^d whose elements may be enumerated
    field_order: int = 1 << 24
    #: largest ambient space q^n the oracle may enumerate
    vectors: int = 1 << 20
    #: worst-case (subspaces x vectors x shifts) for an oracle sweep
    sweep: int = 1 << 36

    def __post_init__(self) -> None:
        if min(self.field_order, self.vectors, self.sweep) <= 0:
            raise ValueError("budgets must be positive")

    @classmethod
    def uniform(cls, limit: int) -> "Budget":
        """Budget with ``field_order`` and ``vectors`` both set to ``limit``."""
        return cls(field_order=limit, vectors=limit)

    def check(self, what: str, needed: int, limit: int) -> None:
        if needed > limit:
            raise ResourceExceeded(f"{what}: {needed} exceeds budget {limit}")


DEFAULT_BUDGET = Budget()
