"""
Counting small covers
=====================

A characteristic coloring gives every facet a nonzero vector of GF(2)^n so
that the n colors around each vertex are independent. Colors are encoded as
ints: e1 = 1, e2 = 2, e3 = 4.
"""

import time

from smallcovers import builtin, equivalence_classes, find_orientable, is_orientable
from smallcovers.covers import count_characteristic, serialize_coloring

###############################################################################
# The square has 18 colorings: the proper 3-colorings of a 4-cycle. Up to
# symmetry and change of basis they fall into two classes, the torus and
# the Klein bottle.

sq = equivalence_classes(builtin("square"))
for c in sq.representatives:
    print(c.colors, "orientable" if is_orientable(c) else "non-orientable")

###############################################################################
# The cube and prisms, counted directly and through the GL(3, 2) shortcut.

for name in ["cube", "5-prism", "6-prism"]:
    p = builtin(name)
    print(name, count_characteristic(p, use_symmetry=False), count_characteristic(p))

###############################################################################
# The dodecahedron: 25 classes under its 120 symmetries times GL(3, 2).

t0 = time.perf_counter()
cls = equivalence_classes(builtin("dodecahedron"))
print(f"dodecahedron: {cls.total_count} colorings, {cls.class_count} classes ({time.perf_counter() - t0:.1f}s)")
print("orientable classes:", sum(is_orientable(c) for c in cls.representatives))

###############################################################################
# An orientable cover exists for every 3-polytope tried.

print(serialize_coloring(find_orientable(builtin("dodecahedron"))))
