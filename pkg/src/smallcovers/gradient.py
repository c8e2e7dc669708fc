"""Rank-gradient bookkeeping along a doubling tower.

For a small cover M_j of the level-j polytope P_j, the mod-2 first Betti
number is h_1(P_j) = V_j/2 - 1, which bounds the rank of pi_1(M_j) from
below, while the index over the base is 2^j. All quantities are exact
rationals; decimals appear only when rendering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import SmallCoverError
from .hvector import h_vector
from .polytope import pogorelov_check
from .tower import TowerState

__all__ = [
    "GradientRow",
    "GradientReport",
    "AtkinsonInterval",
    "AtkinsonLevel",
    "AtkinsonReport",
    "TowerSummary",
    "rs_upper_bound",
    "b1_bound_sequence",
    "rgr_ratios",
    "closed_form_limit",
    "atkinson_interval",
    "atkinson_check",
    "commensurable_bounds",
    "summarize",
]


@dataclass(frozen=True)
class TowerSummary:
    """The numbers a gradient report needs: vertex counts, indices, doubling face sizes."""

    V: tuple[int, ...]
    index: tuple[int, ...]
    ks: tuple[int, ...]


def summarize(t: TowerState | TowerSummary) -> TowerSummary:
    if isinstance(t, TowerSummary):
        return t
    return TowerSummary(
        tuple(lvl.V for lvl in t.levels),
        tuple(lvl.index_over_base for lvl in t.levels),
        tuple(t.ks),
    )


def rs_upper_bound(base_rank: int, index: int) -> int:
    """Largest rank a subgroup of the given index can have: index * (rank - 1) + 1."""
    if base_rank < 1 or index < 1:
        raise SmallCoverError("base rank and index must be positive")
    return index * (base_rank - 1) + 1


def _half(V: int) -> int:
    if V % 2:
        raise SmallCoverError(f"odd vertex count {V}: not a simple 3-polytope")
    return V // 2


def b1_bound_sequence(t: TowerState | TowerSummary) -> list[int]:
    """V_j/2 - 1 at every level.

    Given a full tower, each value is checked against h_1 of the level
    polytope.
    """
    s = summarize(t)
    out = [_half(V) - 1 for V in s.V]
    if isinstance(t, TowerState):
        for lvl, b in zip(t.levels, out):
            if h_vector(lvl.polytope)[1] != b:
                raise AssertionError(f"h_1 of level polytope differs from V/2 - 1 = {b}")
    return out


def commensurable_bounds(t: TowerState | TowerSummary) -> list[int]:
    """V_j/2 - 2 at every level: the b_1 bound after losing at most one to a further cover.

    It holds for a tower whose successive indices are at most 2, so the
    index over the base is bounded by 2^j (see ``GradientRow.index``).
    """
    return [_half(V) - 2 for V in summarize(t).V]


def closed_form_limit(V0: int, ks: Sequence[int]) -> Fraction:
    """Limit of (V_j - 4)/2^(j+1) when the face sizes k_i end in a constant tail.

    The last entry of ``ks`` is taken to repeat forever. Since
    V_j / 2^j = V0 - sum_{i<j} k_i / 2^i, the limit is
    (V0 - sum_i k_i / 2^i) / 2 with the geometric tail summed exactly.
    """
    if not ks:
        raise SmallCoverError("need at least one face size")
    m = len(ks)
    head = sum(Fraction(k, 1 << i) for i, k in enumerate(ks[:-1]))
    tail = Fraction(ks[-1] * 2, 1 << (m - 1))  # k * sum_{i >= m-1} 2^-i
    return (V0 - head - tail) / 2


@dataclass(frozen=True)
class GradientRow:
    j: int
    index: int
    V: int
    b1_lower: int
    ratio: Fraction  # (V_j - 4) / (2 * index)
    paper_ratio: Fraction  # (V_j - 3) / (2 * index)
    commensurable_b1: int
    rs_upper: int | None = None
    atkinson_pass: bool | None = None


@dataclass
class GradientReport:
    rows: list[GradientRow]
    limit_estimate: Fraction
    converged: bool  # True when the limit comes from the closed form
    notes: list[str] = field(default_factory=list)

    @property
    def ratios(self) -> list[Fraction]:
        return [r.ratio for r in self.rows]


def _constant_tail(ks: Sequence[int]) -> bool:
    return len(ks) >= 2 and ks[-1] == ks[-2]


def rgr_ratios(
    t: TowerState | TowerSummary,
    base_rank: int | None = None,
    rho: Fraction | None = None,
) -> GradientReport:
    """Per-level rank-gradient lower bounds and their limit.

    ``ratio`` uses rk - 1 >= V_j/2 - 2; ``paper_ratio`` is the variant with
    numerator V_j - 3. They differ by 1/2^(j+1). The limit is exact when the
    observed face sizes end in a repeated value (assumed to persist);
    otherwise it is the last ratio and ``converged`` is False.
    """
    s = summarize(t)
    b1 = b1_bound_sequence(t)
    comm = commensurable_bounds(s)
    atk = atkinson_check(s, rho) if rho is not None else None
    rows = []
    for j, (V, idx) in enumerate(zip(s.V, s.index)):
        rows.append(
            GradientRow(
                j=j,
                index=idx,
                V=V,
                b1_lower=b1[j],
                ratio=Fraction(V - 4, 2 * idx),
                paper_ratio=Fraction(V - 3, 2 * idx),
                commensurable_b1=comm[j],
                rs_upper=rs_upper_bound(base_rank, idx) if base_rank is not None else None,
                atkinson_pass=atk.levels[j].passes if atk is not None and atk.precondition_ok else None,
            )
        )
    if _constant_tail(s.ks):
        limit, converged = closed_form_limit(s.V[0], s.ks), True
    else:
        limit, converged = rows[-1].ratio, False
    report = GradientReport(rows, limit, converged)
    if atk is not None and not atk.precondition_ok:
        report.notes.append(atk.message)
    return report


# ---------------------------------------------------------------- volume bounds


@dataclass(frozen=True)
class AtkinsonInterval:
    """Volume window C(V - 8) <= vol <= D(V - 10) for a right-angled polyhedron with V vertices."""

    V: int
    C: Fraction
    D: Fraction

    @property
    def lo(self) -> Fraction:
        return self.C * (self.V - 8)

    @property
    def hi(self) -> Fraction:
        return self.D * (self.V - 10)

    @property
    def consistent(self) -> bool:
        return self.V > 8 and self.lo <= self.hi


def atkinson_interval(V: int, C, D) -> AtkinsonInterval:
    C, D = Fraction(C), Fraction(D)
    if C <= 0 or D <= 0:
        raise SmallCoverError("volume constants must be positive")
    return AtkinsonInterval(V, C, D)


@dataclass(frozen=True)
class AtkinsonLevel:
    j: int
    V: int
    volume: int  # in units of vol(P_0)
    required: Fraction  # 2^j * rho * (V_0 - 8) + 10
    passes: bool


@dataclass
class AtkinsonReport:
    rho: Fraction
    precondition_ok: bool
    message: str
    levels: list[AtkinsonLevel]
    rho_max: Fraction | None  # largest rho for which every level passes
    conditional: bool = True  # the true constants are unknown; results hold for the supplied ratio only


def atkinson_check(t: TowerState | TowerSummary, C, D=1) -> AtkinsonReport:
    """Test V_j >= 2^j (C/D)(V_0 - 8) + 10 at each level.

    Pass ``C`` and ``D`` or a single ratio ``rho = C/D`` as ``C``. Volumes
    are the proxy vol(P_j) = 2^j vol(P_0). The seed must have more than
    8 vertices; a seed failing that (such as the cube) is reported, not
    checked.
    """
    C, D = Fraction(C), Fraction(D)
    if C <= 0 or D <= 0:
        raise SmallCoverError("volume constants must be positive")
    rho = C / D
    s = summarize(t)
    V0 = s.V[0]
    if V0 <= 8:
        msg = f"precondition violated: V_0 = {V0} is not > 8"
        if isinstance(t, TowerState) and t.levels[0].polytope.dim == 3:
            if not pogorelov_check(t.levels[0].polytope).ok:
                msg += " (seed also fails the right-angled realizability check)"
        return AtkinsonReport(rho, False, msg, [], None)
    levels = []
    bounds = []
    for j, (V, idx) in enumerate(zip(s.V, s.index)):
        required = idx * rho * (V0 - 8) + 10
        levels.append(AtkinsonLevel(j, V, idx, required, V >= required))
        bounds.append(Fraction(V - 10, idx * (V0 - 8)))
    return AtkinsonReport(rho, True, "ok", levels, min(bounds))
