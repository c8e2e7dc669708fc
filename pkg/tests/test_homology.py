import itertools

import pytest

from conftest import CUBE_T3, SQUARE_KLEIN, SQUARE_TORUS
from smallcovers.covers import Coloring, enumerate_characteristic, is_orientable
from smallcovers.errors import ColoringError
from smallcovers.homology import (
    betti_mod2,
    boundary_squares_vanish,
    build_quotient_complex,
    euler_characteristic,
    top_cells_orientable,
    verify_dj,
)
from smallcovers.hvector import h_vector
from smallcovers.polytope import builtin


def expected_counts(p, c):
    # sum over faces of 2^n / |H_f| = 2^(n - #facets containing f)
    n = p.dim
    return tuple(len(p.face_lattice[d]) * 2 ** d for d in range(n + 1))


def test_cube_t3_cells(cube):
    qc = build_quotient_complex(cube, Coloring(3, CUBE_T3))
    assert qc.counts() == (8, 24, 24, 8) == expected_counts(cube, None)


def test_square_torus_cells(square):
    qc = build_quotient_complex(square, Coloring(2, SQUARE_TORUS))
    assert qc.counts() == (4, 8, 4)


def test_rejects_non_characteristic(cube):
    with pytest.raises(ColoringError):
        build_quotient_complex(cube, Coloring(3, (1,) * 6))


def test_betti_examples(cube, square):
    assert betti_mod2(build_quotient_complex(cube, Coloring(3, CUBE_T3))) == (1, 3, 3, 1)
    assert betti_mod2(build_quotient_complex(square, Coloring(2, SQUARE_TORUS))) == (1, 2, 1)
    assert betti_mod2(build_quotient_complex(square, Coloring(2, SQUARE_KLEIN))) == (1, 2, 1)


def test_two_cell_circle():
    # triangle: three edges, each vertex colored by two distinct colors; sanity of small cases
    p = builtin("triangle")
    for c in enumerate_characteristic(p):
        qc = build_quotient_complex(p, c)
        assert betti_mod2(qc) == (1, 1, 1) == h_vector(p)


def test_square_all_colorings(square):
    cols = list(enumerate_characteristic(square))
    assert len(cols) == 18
    for c in cols:
        qc = build_quotient_complex(square, c)
        assert verify_dj(square, c)
        assert euler_characteristic(qc) == 0
        assert top_cells_orientable(qc) == is_orientable(c)


@pytest.mark.parametrize("name", ["3-prism", "5-prism", "6-prism"])
def test_invariants_sampled(name):
    p = builtin(name)
    for c in itertools.islice(enumerate_characteristic(p), 0, None, 131):
        qc = build_quotient_complex(p, c)
        assert boundary_squares_vanish(qc)
        assert qc.counts() == expected_counts(p, c)
        b = betti_mod2(qc)
        assert b == h_vector(p)
        assert b == tuple(reversed(b))
        assert euler_characteristic(qc) == 0
        assert top_cells_orientable(qc) == is_orientable(c)


def test_boundary_of_boundary_detects_corruption(cube):
    qc = build_quotient_complex(cube, Coloring(3, CUBE_T3))
    rows = list(qc.boundaries[2])
    rows[0] ^= 1  # perturb one incidence
    broken = type(qc)(qc.n, qc.cells, qc.boundaries[:2] + (tuple(rows),) + qc.boundaries[3:])
    assert not boundary_squares_vanish(broken)
