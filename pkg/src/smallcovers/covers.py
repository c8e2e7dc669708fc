"""Characteristic colorings of simple polytopes (small covers).

A coloring assigns to every facet a nonzero vector of GF(2)^n, encoded as an
int in ``1 .. 2^n - 1`` (bit i is the coordinate of the i-th basis vector,
so e1 = 1, e2 = 2, e1 + e2 = 3). It is characteristic when the n colors
around every vertex are linearly independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import gf2
from .errors import ColoringError
from .polytope import FacePermutation, Polytope, automorphism_group, validate

__all__ = [
    "Coloring",
    "CoverClassification",
    "parse_coloring",
    "serialize_coloring",
    "load_coloring",
    "is_characteristic",
    "enumerate_characteristic",
    "count_characteristic",
    "equivalence_classes",
    "canonical_form",
    "gl_order",
    "is_orientable",
    "find_orientable",
    "act",
]


@dataclass(frozen=True)
class Coloring:
    n: int
    colors: tuple[int, ...]  # indexed by facet id

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        top = 1 << self.n
        for fid, c in enumerate(self.colors):
            if not 0 < c < top:
                raise ColoringError(f"facet {fid}: color {c} is not a nonzero vector of GF(2)^{self.n}")

    def __getitem__(self, facet: int) -> int:
        return self.colors[facet]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass
class CoverClassification:
    total_count: int
    class_count: int
    representatives: list[Coloring]
    group_order_used: int


# ---------------------------------------------------------------- text format


def serialize_coloring(c: Coloring) -> str:
    """One ``facet_id: bits`` line per facet; bits is the color as an n-digit binary numeral."""
    return "".join(f"{fid}: {col:0{c.n}b}\n" for fid, col in enumerate(c.colors))


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    entries: dict[int, int] = {}
    width = n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, bits = line.partition(":")
        bits = bits.strip()
        if not sep or not head.strip().isdigit() or not bits or set(bits) - {"0", "1"}:
            raise ColoringError(f"line {lineno}: expected 'facet_id: bitvector', got {raw!r}")
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise ColoringError(f"line {lineno}: bitvector {bits!r} has length {len(bits)}, expected {width}")
        fid = int(head)
        if fid in entries:
            raise ColoringError(f"line {lineno}: facet {fid} colored twice")
        entries[fid] = int(bits, 2)
    if not entries:
        raise ColoringError("empty coloring")
    if sorted(entries) != list(range(len(entries))):
        raise ColoringError("facet ids must be contiguous from 0")
    return Coloring(width, tuple(entries[i] for i in range(len(entries))))


def load_coloring(path, n: int | None = None) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read(), n)


# ---------------------------------------------------------------- characteristic test


def _check_shape(p: Polytope, c: Coloring) -> None:
    if c.n != p.dim:
        raise ColoringError(f"coloring has n={c.n} but polytope has dimension {p.dim}")
    if len(c.colors) != p.n_facets:
        raise ColoringError(f"coloring assigns {len(c.colors)} facets, polytope has {p.n_facets}")


def is_characteristic(p: Polytope, c: Coloring) -> bool:
    _check_shape(p, c)
    return all(gf2.is_independent([c.colors[f] for f in fs]) for fs in p.vertex_facets)


def gl_order(n: int) -> int:
    out = 1
    for i in range(n):
        out *= (1 << n) - (1 << i)
    return out


def _facet_order(p: Polytope, first: Sequence[int] = ()) -> list[int]:
    """Breadth-first facet order so that vertices close early and prune hard."""
    order = list(first)
    seen = set(order)
    if not order:
        order, seen = [0], {0}
    i = 0
    while i < len(order):
        for nb in sorted(p.facet_adjacency[order[i]]):
            if nb not in seen:
                seen.add(nb)
                order.append(nb)
        i += 1
    for f in range(p.n_facets):
        if f not in seen:
            order.append(f)
    return order


def _backtrack(p: Polytope, fixed: dict[int, int]) -> Iterator[tuple[int, ...]]:
    n = p.dim
    F = p.n_facets
    order = _facet_order(p, sorted(fixed))
    pos = {f: i for i, f in enumerate(order)}
    # vertices to check once a given facet (by order position) is colored
    closes: list[list[tuple[int, ...]]] = [[] for _ in range(F)]
    # facets sharing a vertex with an earlier-colored facet (pairwise distinctness)
    for fs in p.vertex_facets:
        closes[max(pos[f] for f in fs)].append(fs)
    earlier_nb: list[list[int]] = [
        sorted({g for fs in p.vertex_facets if order[i] in fs for g in fs if pos[g] < i}) for i in range(F)
    ]
    colors = [0] * F
    palette = range(1, 1 << n)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == F:
            yield tuple(colors)
            return
        f = order[i]
        choices = (fixed[f],) if f in fixed else palette
        for col in choices:
            if any(colors[g] == col for g in earlier_nb[i]):
                continue
            colors[f] = col
            if all(gf2.is_independent([colors[g] for g in fs]) for fs in closes[i]):
                yield from rec(i + 1)
        colors[f] = 0

    yield from rec(0)


def enumerate_characteristic(p: Polytope, normalized: bool = False) -> Iterator[Coloring]:
    """Yield every characteristic coloring of ``p`` exactly once.

    Backtracking runs over facets in a fixed breadth-first order with
    independence pruning at each vertex as soon as its facets are all
    colored; output order is deterministic. With ``normalized=True`` the
    facets at vertex 0 are pinned to e1, ..., en, which picks exactly one
    coloring from each GL(n, 2)-orbit.
    """
    rep = validate(p)
    if not rep.ok:
        from .errors import InvalidPolytopeError

        raise InvalidPolytopeError(str(rep))
    fixed = {}
    if normalized:
        fixed = {f: 1 << i for i, f in enumerate(p.vertex_facets[0])}
    for colors in _backtrack(p, fixed):
        yield Coloring(p.dim, colors)


def count_characteristic(p: Polytope, use_symmetry: bool = True) -> int:
    """Number of characteristic colorings, optionally via the GL(n, 2) stabilizer shortcut."""
    if use_symmetry:
        return gl_order(p.dim) * sum(1 for _ in enumerate_characteristic(p, normalized=True))
    return sum(1 for _ in enumerate_characteristic(p))


# ---------------------------------------------------------------- equivalence


def act(c: Coloring, sigma: FacePermutation | Sequence[int] | None = None, matrix: Sequence[int] | None = None) -> Coloring:
    """The coloring A . c . sigma^-1.

    ``sigma`` permutes facets (old facet i becomes sigma[i]); ``matrix`` lists
    the images of e1, ..., en as encoded vectors.
    """
    colors = list(c.colors)
    if sigma is not None:
        perm = sigma.facets if isinstance(sigma, FacePermutation) else sigma
        moved = [0] * len(colors)
        for i, j in enumerate(perm):
            moved[j] = colors[i]
        colors = moved
    if matrix is not None:
        colors = [_apply_matrix(matrix, x) for x in colors]
    return Coloring(c.n, tuple(colors))


def _apply_matrix(cols: Sequence[int], x: int) -> int:
    out = 0
    i = 0
    while x:
        if x & 1:
            out ^= cols[i]
        x >>= 1
        i += 1
    return out


def _gl_normal_form(colors: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least image of ``colors`` under GL(n, 2).

    Scanning left to right, the k-th color that is independent of the earlier
    ones must go to 2^k; every other color is then forced.
    """
    image = {0: 0}
    out = []
    k = 0
    for x in colors:
        y = image.get(x)
        if y is None:
            new = 1 << k
            k += 1
            image.update({v ^ x: w ^ new for v, w in list(image.items())})
            y = image[x]
        out.append(y)
    return tuple(out)


def canonical_form(c: Coloring, group: Sequence[FacePermutation]) -> tuple[int, ...]:
    """Least encoded coloring in the orbit under ``group`` x GL(n, 2)."""
    best = None
    F = len(c.colors)
    for g in group:
        moved = [0] * F
        for i, j in enumerate(g.facets):
            moved[j] = c.colors[i]
        cand = _gl_normal_form(moved)
        if best is None or cand < best:
            best = cand
    return best


def equivalence_classes(p: Polytope, use_symmetry: bool = True) -> CoverClassification:
    """Orbits of characteristic colorings under Aut(P) x GL(n, 2).

    With ``use_symmetry`` only colorings normalized at vertex 0 are searched
    (one per GL-orbit) and the total is recovered by the factor |GL(n, 2)|.
    """
    group = automorphism_group(p)
    reps: set[tuple[int, ...]] = set()
    total = 0
    for c in enumerate_characteristic(p, normalized=use_symmetry):
        total += 1
        reps.add(canonical_form(c, group))
    if use_symmetry:
        total *= gl_order(p.dim)
    representatives = [Coloring(p.dim, r) for r in sorted(reps)]
    return CoverClassification(total, len(reps), representatives, len(group) * gl_order(p.dim))


# ---------------------------------------------------------------- orientability


def is_orientable(c: Coloring) -> bool:
    """True iff some homomorphism GF(2)^n -> {+1, -1} sends every facet color to -1.

    Such a homomorphism is x -> (-1)^(w . x) for a nonzero w; all 2^n - 1
    are tried.
    """
    return any(all(bin(w & x).count("1") & 1 for x in c.colors) for w in range(1, 1 << c.n))


def find_orientable(p: Polytope) -> Coloring | None:
    for c in enumerate_characteristic(p):
        if is_orientable(c):
            return c
    return None
