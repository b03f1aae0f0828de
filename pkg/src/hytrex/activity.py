"""Internal and external activity of hypertrees under a fixed order on E.

The fast path decides activity by membership probes against the enumerated
hypertree set: a hyperedge is internally inactive when it can send valence
to some smaller hyperedge, externally inactive when it can receive valence
from one.  The subset-scanning variants decide the same questions from
tight sets alone and exist to cross-check the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import BipGraph, mu_table, normalize_edge_order, _require_subset_capacity
from .hypertrees import HypertreeSet, transfer

__all__ = [
    "ActivityProfile",
    "activity_profile",
    "internal_active_flags",
    "external_active_flags",
    "internal_inactivity",
    "external_inactivity",
    "internal_inactive_by_tight_sets",
    "external_inactive_by_tight_sets",
]


@dataclass(frozen=True)
class ActivityProfile:
    """Per-hyperedge activity flags for one hypertree (True means active)."""

    hypertree: tuple[int, ...]
    internal_active: tuple[bool, ...]
    external_active: tuple[bool, ...]

    @property
    def internal_activity(self) -> int:
        return sum(self.internal_active)

    @property
    def internal_inactivity(self) -> int:
        return len(self.internal_active) - self.internal_activity

    @property
    def external_activity(self) -> int:
        return sum(self.external_active)

    @property
    def external_inactivity(self) -> int:
        return len(self.external_active) - self.external_activity


def internal_active_flags(b: HypertreeSet, f, order) -> tuple[bool, ...]:
    """Flag per hyperedge: False when valence can move to a smaller one."""
    f = tuple(f)
    flags = [True] * len(f)
    for pos, e in enumerate(order):
        if f[e] == 0:
            continue
        for smaller in order[:pos]:
            if transfer(f, e, smaller) in b:
                flags[e] = False
                break
    return tuple(flags)


def external_active_flags(b: HypertreeSet, f, order) -> tuple[bool, ...]:
    """Flag per hyperedge: False when valence can arrive from a smaller one."""
    f = tuple(f)
    flags = [True] * len(f)
    for pos, e in enumerate(order):
        for smaller in order[:pos]:
            if f[smaller] == 0:
                continue
            if transfer(f, smaller, e) in b:
                flags[e] = False
                break
    return tuple(flags)


def _check_member(b: HypertreeSet, f) -> tuple[int, ...]:
    f = tuple(f)
    if f not in b:
        raise GraphError("f is not a member of the hypertree set")
    return f


def internal_inactivity(g: BipGraph, b: HypertreeSet, f, order=None) -> int:
    f = _check_member(b, f)
    order = normalize_edge_order(g, order)
    flags = internal_active_flags(b, f, order)
    return len(flags) - sum(flags)


def external_inactivity(g: BipGraph, b: HypertreeSet, f, order=None) -> int:
    f = _check_member(b, f)
    order = normalize_edge_order(g, order)
    flags = external_active_flags(b, f, order)
    return len(flags) - sum(flags)


def activity_profile(g: BipGraph, b: HypertreeSet, f, order=None) -> ActivityProfile:
    f = _check_member(b, f)
    order = normalize_edge_order(g, order)
    return ActivityProfile(
        hypertree=f,
        internal_active=internal_active_flags(b, f, order),
        external_active=external_active_flags(b, f, order),
    )


def _tight_masks(g: BipGraph, f) -> list[int]:
    _require_subset_capacity(g.n_e)
    table = mu_table(g)
    size = 1 << g.n_e
    sums = [0] * size
    out = []
    for mask in range(1, size):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + f[low.bit_length() - 1]
        if sums[mask] == table[mask]:
            out.append(mask)
    return out


def internal_inactive_by_tight_sets(g: BipGraph, f, order, e: int) -> bool:
    """Internal inactivity of ``e`` decided from tight sets only: ``f(e)``
    must be positive and some smaller hyperedge must lie in no tight set
    that avoids ``e``."""
    f = tuple(f)
    order = normalize_edge_order(g, order)
    if f[e] == 0:
        return False
    tight = _tight_masks(g, f)
    bit_e = 1 << e
    pos = order.index(e)
    for smaller in order[:pos]:
        bit_s = 1 << smaller
        if not any(mask & bit_s and not mask & bit_e for mask in tight):
            return True
    return False


def external_inactive_by_tight_sets(g: BipGraph, f, order, e: int) -> bool:
    """External inactivity of ``e`` from tight sets only: some smaller
    hyperedge with positive valence must avoid every tight set through
    ``e``."""
    f = tuple(f)
    order = normalize_edge_order(g, order)
    tight = _tight_masks(g, f)
    bit_e = 1 << e
    pos = order.index(e)
    for smaller in order[:pos]:
        if f[smaller] == 0:
            continue
        bit_s = 1 << smaller
        if not any(mask & bit_e and not mask & bit_s for mask in tight):
            return True
    return False
