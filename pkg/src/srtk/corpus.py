"""Built-in test complexes."""

from __future__ import annotations

import itertools

from .complex import SimplicialComplex, from_facets


class UnknownBuiltin(KeyError):
    pass


# 6-vertex real projective plane (half of the icosahedron mod antipodes)
RP2_6 = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]

# Csaszar/Moebius 7-vertex torus: translates of {0,1,3} and {0,2,3} mod 7
TORUS_7 = [
    tuple(sorted((i + a) % 7 + 1 for a in base))
    for base in ((0, 1, 3), (0, 2, 3))
    for i in range(7)
]

WEDGE_TWO_CIRCLES = [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)]

BOWTIE_FILLED = [(1, 2, 3), (1, 4, 5)]


def simplex_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-simplex: all k-subsets of [k+1]."""
    if k < 1:
        raise ValueError("simplex_boundary needs k >= 1")
    return from_facets(k + 1, itertools.combinations(range(1, k + 2), k))


def cross_polytope(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross-polytope; vertex i and i+k are antipodal."""
    if k < 1:
        raise ValueError("cross_polytope needs k >= 1")
    facets = itertools.product(*[(i, i + k) for i in range(1, k + 1)])
    return from_facets(2 * k, facets)


_FIXED = {
    "rp2_6": (6, RP2_6),
    "torus7": (7, TORUS_7),
    "wedge_two_circles": (5, WEDGE_TWO_CIRCLES),
    "bowtie_filled": (5, BOWTIE_FILLED),
}

_FAMILIES = {
    "simplex_boundary": simplex_boundary,
    "cross_polytope": cross_polytope,
}


def builtin(name: str) -> SimplicialComplex:
    if name in _FIXED:
        n, facets = _FIXED[name]
        return from_facets(n, facets)
    family, _, arg = name.partition(":")
    if family in _FAMILIES and arg.isdigit():
        return _FAMILIES[family](int(arg))
    raise UnknownBuiltin(name)


def builtin_names() -> list[str]:
    return list(_FIXED) + [f"{fam}:k" for fam in _FAMILIES]
