"""Mod-2 cellular homology of small covers.

The small cover M = (P x GF(2)^n) / ~ has one open cell for every pair
(face f of P, coset g + H_f), where H_f is spanned by the colors of the
facets containing f. The cell of (f, g + H_f) has boundary the sum of the
cells (f', g + H_f') over the codimension-one faces f' of f.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .covers import Coloring, is_characteristic
from .errors import ColoringError
from .hvector import h_vector
from .polytope import Polytope

__all__ = [
    "QuotientComplex",
    "build_quotient_complex",
    "betti_mod2",
    "verify_dj",
    "euler_characteristic",
    "boundary_squares_vanish",
    "top_cells_orientable",
]


@dataclass(frozen=True)
class QuotientComplex:
    n: int
    # cells[d] lists (facet set of the face, least element of the coset)
    cells: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]
    # boundaries[d][i]: bitmask over (d-1)-cells of the boundary of cell i; boundaries[0] is all zero
    boundaries: tuple[tuple[int, ...], ...]

    def counts(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)


def _coset_table(subgroup: frozenset[int], order: int) -> tuple[int, ...]:
    """Least element of g + subgroup, for every g."""
    return tuple(min(g ^ h for h in subgroup) for g in range(order))


def build_quotient_complex(p: Polytope, c: Coloring) -> QuotientComplex:
    if not is_characteristic(p, c):
        raise ColoringError("coloring is not characteristic; the quotient is not a manifold")
    n = p.dim
    faces = p.face_lattice
    order = 1 << n
    cells: list[list[tuple[tuple[int, ...], int]]] = []
    cosets: dict[frozenset[int], tuple[int, ...]] = {}
    index: list[dict[tuple[frozenset[int], int], int]] = []
    for d in range(n + 1):
        layer = []
        idx = {}
        for s in faces[d]:
            table = cosets[s] = _coset_table(gf2.span(c.colors[f] for f in s), order)
            for rep in sorted(set(table)):
                idx[(s, rep)] = len(layer)
                layer.append((tuple(sorted(s)), rep))
        cells.append(layer)
        index.append(idx)
    boundaries = [tuple(0 for _ in cells[0])]
    sub = p.subfaces
    for d in range(1, n + 1):
        below = index[d - 1]
        rows = []
        for s_tuple, rep in cells[d]:
            row = 0
            for t in sub[frozenset(s_tuple)]:
                row ^= 1 << below[(t, cosets[t][rep])]
            rows.append(row)
        boundaries.append(tuple(rows))
    return QuotientComplex(n, tuple(tuple(x) for x in cells), tuple(boundaries))


def betti_mod2(qc: QuotientComplex) -> tuple[int, ...]:
    """b_d = dim ker d_d - rank d_{d+1} over GF(2)."""
    n = qc.n
    ranks = [0] + [gf2.rank(qc.boundaries[d]) for d in range(1, n + 1)] + [0]
    counts = qc.counts()
    return tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(n + 1))


def euler_characteristic(qc: QuotientComplex) -> int:
    return sum((-1) ** d * k for d, k in enumerate(qc.counts()))


def boundary_squares_vanish(qc: QuotientComplex) -> bool:
    return all(
        not any(gf2.compose(qc.boundaries[d - 1], qc.boundaries[d])) for d in range(2, qc.n + 1)
    )


def top_cells_orientable(qc: QuotientComplex) -> bool:
    """Whether top cells admit signs that differ across every codimension-one cell.

    Each (n-1)-cell lies on exactly two top cells; this is a bipartiteness
    test on the graph of top cells glued along them.
    """
    n = qc.n
    cofaces: dict[int, list[int]] = {}
    for i, row in enumerate(qc.boundaries[n]):
        j = 0
        while row:
            if row & 1:
                cofaces.setdefault(j, []).append(i)
            row >>= 1
            j += 1
    ntop = len(qc.cells[n])
    adj: list[list[int]] = [[] for _ in range(ntop)]
    for cell, tops in cofaces.items():
        if len(tops) != 2:
            raise AssertionError(f"codimension-one cell {cell} lies on {len(tops)} top cells")
        a, b = tops
        adj[a].append(b)
        adj[b].append(a)
    sign = [0] * ntop
    sign[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if sign[w] == 0:
                sign[w] = -sign[u]
                stack.append(w)
            elif sign[w] == sign[u]:
                return False
    return True


def verify_dj(p: Polytope, c: Coloring) -> bool:
    """Mod-2 Betti numbers of the small cover equal the h-vector of ``p``."""
    return betti_mod2(build_quotient_complex(p, c)) == h_vector(p)
