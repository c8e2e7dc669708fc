"""Towers of polytopes obtained by repeatedly doubling along a face.

Doubling P along a face f glues two copies of P along f. Combinatorially:
f disappears, each face g adjacent to f merges with its mirror copy into a
face with 2(|g| - 2) vertices, and the vertices of f (now of degree two)
are suppressed. With k = |f| this gives

    V' = 2V - 2k,   E' = 2E - 3k,   F' = 2F - 2 - k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .covers import Coloring, is_characteristic
from .errors import ColoringError, SmallCoverError
from .polytope import Polytope, validate

__all__ = [
    "TowerLevel",
    "TowerState",
    "double",
    "double_with_origins",
    "propagate_coloring",
    "build_tower",
    "parse_strategy",
]


@dataclass(frozen=True)
class TowerLevel:
    polytope: Polytope
    coloring: Coloring
    index_over_base: int
    doubling_face: int | None = None  # face used to build the next level
    k: int | None = None  # its vertex count

    @property
    def V(self) -> int:
        return self.polytope.n_vertices

    @property
    def E(self) -> int:
        return len(self.polytope.edge_faces)

    @property
    def F(self) -> int:
        return self.polytope.n_facets


@dataclass
class TowerState:
    levels: list[TowerLevel] = field(default_factory=list)
    strategy: str = "min-face"

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def ks(self) -> list[int]:
        return [lvl.k for lvl in self.levels[:-1]]


def double_with_origins(p: Polytope, face: int) -> tuple[Polytope, list[int]]:
    """Double ``p`` along ``face``; also return the original facet of each new facet.

    New facet order: for each old facet other than ``face`` in id order, the
    merged facet or the first copy; then the second copies of the untouched
    facets in id order.
    """
    if p.dim != 3:
        raise SmallCoverError("doubling is defined for 3-polytopes")
    if not 0 <= face < p.n_facets:
        raise SmallCoverError(f"unknown facet id {face}")
    rep = validate(p)
    if not rep.ok:
        from .errors import InvalidPolytopeError

        raise InvalidPolytopeError(str(rep))
    V = p.n_vertices
    gone = set(p.facets[face])
    neighbours = p.facet_adjacency[face]

    new_faces: list[list[int]] = []
    origins: list[int] = []
    for gid, g in enumerate(p.facets):
        if gid == face:
            continue
        if gid in neighbours:
            k = len(g)
            # rotate so the two shared vertices come last: [x1..xm, a, b]
            i = next(j for j in range(k) if g[j] not in gone and g[(j - 1) % k] in gone)
            rest = [g[(i + j) % k] for j in range(k - 2)]
            if any(v in gone for v in rest):
                raise SmallCoverError(f"facet {gid} meets facet {face} in more than an edge")
            new_faces.append(rest + [v + V for v in reversed(rest)])
        else:
            new_faces.append(list(g))
        origins.append(gid)
    for gid, g in enumerate(p.facets):
        if gid != face and gid not in neighbours:
            new_faces.append([v + V for v in g])
            origins.append(gid)

    used = sorted({v for f in new_faces for v in f})
    renum = {v: i for i, v in enumerate(used)}
    out = Polytope(3, tuple(tuple(renum[v] for v in f) for f in new_faces))
    return out, origins


def double(p: Polytope, face: int) -> Polytope:
    return double_with_origins(p, face)[0]


def propagate_coloring(p: Polytope, c: Coloring, face: int) -> Coloring:
    """Coloring of the doubled polytope: every facet keeps the color of its original."""
    if not is_characteristic(p, c):
        raise ColoringError("input coloring is not characteristic")
    q, origins = double_with_origins(p, face)
    out = Coloring(c.n, tuple(c.colors[o] for o in origins))
    if not is_characteristic(q, out):
        raise AssertionError("propagated coloring lost the characteristic property")
    return out


_LIST_RE = re.compile(r"^list:(\d+(,\d+)*)$")


def parse_strategy(strategy: str | Sequence[int]) -> str | list[int]:
    """Accept ``min-face``, ``round-robin``, ``list:3,0,7`` or an explicit id sequence."""
    if not isinstance(strategy, str):
        return [int(x) for x in strategy]
    if strategy in ("min-face", "min-vertex-face"):
        return "min-face"
    if strategy == "round-robin":
        return strategy
    m = _LIST_RE.match(strategy)
    if m:
        return [int(x) for x in m.group(1).split(",")]
    raise SmallCoverError(f"unknown strategy {strategy!r}; use min-face, round-robin or list:i,j,...")


def _choose_face(p: Polytope, policy: str | list[int], j: int) -> int:
    if policy == "min-face":
        return min(range(p.n_facets), key=lambda f: (len(p.facets[f]), f))
    if policy == "round-robin":
        return j % p.n_facets
    if j >= len(policy):
        raise SmallCoverError(f"explicit face list has {len(policy)} entries, level {j} needs one more")
    return policy[j]


def build_tower(p: Polytope, c: Coloring, strategy: str | Sequence[int] = "min-face", depth: int = 0) -> TowerState:
    """Levels 0..depth, each the double of the previous along the chosen face.

    ``min-face`` picks a face with fewest vertices (smallest id on ties);
    ``round-robin`` picks facet ``j mod F_j`` at level j.
    """
    if depth < 0:
        raise SmallCoverError("depth must be nonnegative")
    policy = parse_strategy(strategy)
    if not is_characteristic(p, c):
        raise ColoringError("seed coloring is not characteristic")
    name = strategy if isinstance(strategy, str) else "list:" + ",".join(map(str, policy))
    state = TowerState(strategy="min-face" if policy == "min-face" else name)
    cur, col = p, c
    for j in range(depth + 1):
        if j == depth:
            state.levels.append(TowerLevel(cur, col, 1 << j))
            break
        f = _choose_face(cur, policy, j)
        state.levels.append(TowerLevel(cur, col, 1 << j, f, len(cur.facets[f])))
        col = propagate_coloring(cur, col, f)
        cur = double(cur, f)
    return state
