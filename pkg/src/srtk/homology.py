"""Reduced simplicial homology over GF(p), Hochster's local cohomology
dimensions, and the Cohen-Macaulay / Buchsbaum / 2-CM predicates.

Only the characteristic matters for Betti numbers, so every function here
works over the prime field GF(p) even when the artinian reduction runs over
an extension of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .complex import SimplicialComplex
from .linalg import PrimeField, as_field, rank


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """Reduced Betti numbers; ``betti[i]`` is beta_{i-1}, i.e. the list starts at beta_{-1}."""

    p: int
    betti: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        """beta_j for j >= -1; zero outside the stored range."""
        if j < -1 or j + 1 >= len(self.betti):
            return 0
        return self.betti[j + 1]

    def as_dict(self) -> dict[int, int]:
        return {j - 1: b for j, b in enumerate(self.betti)}


@dataclass(frozen=True)
class LocalCohomologyDims:
    i: int
    dims: dict[int, int]

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)


def _char(p) -> int:
    return p if isinstance(p, int) else as_field(p).char


def boundary_matrix(cx: SimplicialComplex, j: int) -> np.ndarray:
    """Integer matrix of the augmented boundary map from j-faces to (j-1)-faces."""
    rows = cx.faces_of_dim(j - 1)
    cols = cx.faces_of_dim(j)
    index = {f: r for r, f in enumerate(rows)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, f in enumerate(cols):
        for i in range(len(f)):
            M[index[f[:i] + f[i + 1:]], c] = -1 if i % 2 else 1
    return M


@lru_cache(maxsize=None)
def _boundary_ranks(cx: SimplicialComplex, p: int) -> tuple[int, ...]:
    fld = PrimeField(p)
    # ranks[j] = rank of d_j, j = 0..dim; d_{-1} and d_{dim+1} are zero
    return tuple(rank(boundary_matrix(cx, j) % p, fld) for j in range(cx.d))


@lru_cache(maxsize=None)
def _betti(cx: SimplicialComplex, p: int) -> tuple[int, ...]:
    if cx.is_void:
        return (0,)
    ranks = (0,) + _boundary_ranks(cx, p) + (0,)
    f = cx.f_vector()
    # beta_{j} at list position j+1; ranks[j+1] is rank of d_j
    return tuple(f[j + 1] - ranks[j + 1] - ranks[j + 2] for j in range(-1, cx.d))


def reduced_betti(cx: SimplicialComplex, p=32003) -> BettiTable:
    p = _char(p)
    return BettiTable(p, _betti(cx, p))


def hochster_dims(cx: SimplicialComplex, p, i: int, depth: int | None = None) -> LocalCohomologyDims:
    """Graded dimensions of H^i_m(K[cx]) in degrees 0, -1, ..., -depth.

    Each face F contributes dim H~_{i-|F|-1}(lk F) once for every negative
    multidegree with support F, and there are C(j-1, |F|-1) of those in total
    degree -j.
    """
    p = _char(p)
    if not 0 <= i <= cx.d:
        raise IndexOutOfRange(f"local cohomology index {i} outside [0, {cx.d}]")
    depth = cx.n if depth is None else depth
    per_size = [0] * (cx.d + 1)
    for F in cx.faces():
        per_size[len(F)] += reduced_betti(cx.link(F), p)[i - len(F) - 1]
    dims = {0: per_size[0]}
    for j in range(1, depth + 1):
        dims[-j] = sum(comb(j - 1, s - 1) * per_size[s] for s in range(1, cx.d + 1))
    return LocalCohomologyDims(i, dims)


def _links_acyclic_below_top(cx: SimplicialComplex, p: int) -> bool:
    for F in cx.faces():
        lk = cx.link(F)
        b = _betti(lk, p)
        # b[k] is beta_{k-1}; need beta_j = 0 for j < dim lk = lk.d - 1
        if any(b[k] for k in range(lk.d)):
            return False
    return True


@lru_cache(maxsize=None)
def _cm(cx: SimplicialComplex, p: int) -> bool:
    return _links_acyclic_below_top(cx, p)


def is_cohen_macaulay(cx: SimplicialComplex, p=32003) -> bool:
    """Reisner's criterion: every link (including lk of the empty face) has homology only in top dimension."""
    return _cm(cx, _char(p))


def is_buchsbaum(cx: SimplicialComplex, p=32003) -> bool:
    p = _char(p)
    return cx.is_pure() and all(_cm(cx.link((v,)), p) for v in cx.vertices)


def is_two_cm(cx: SimplicialComplex, p=32003) -> bool:
    """CM, and deleting any single vertex leaves a CM complex of the same dimension."""
    p = _char(p)
    if not _cm(cx, p):
        return False
    for v in cx.vertices:
        rest = cx.deletion((v,))
        if rest.d != cx.d or not _cm(rest, p):
            return False
    return True


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Reduced Euler characteristic, sum over j >= -1 of (-1)^j f_j."""
    return sum((-1) ** (j - 1) * fj for j, fj in enumerate(cx.f_vector()))
