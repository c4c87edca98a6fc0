"""Finite simplicial complexes given by their facets.

Vertices are integers ``1..n``; faces are strictly increasing tuples.  Links,
stars and deletions keep the ambient ground set ``[n]`` so that face labels
stay comparable across subcomplexes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

Face = tuple[int, ...]


class ComplexError(ValueError):
    pass


class EmptyInput(ComplexError):
    pass


class VertexOutOfRange(ComplexError):
    pass


class ParseError(ComplexError):
    pass


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _minimal_facets(faces: Iterable[Face]) -> tuple[Face, ...]:
    uniq = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[tuple[Face, int]] = []
    for f in uniq:
        m = _mask(f)
        if not any(m & km == m for _, km in kept):
            kept.append((f, m))
    return tuple(sorted(f for f, _ in kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the ground set ``[n]``.

    ``facets == ()`` is the void complex and ``facets == ((),)`` the
    irrelevant complex ``{∅}``.  Both only arise as links or deletions;
    :func:`from_facets` refuses to build them.
    """

    n: int
    facets: tuple[Face, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @cached_property
    def d(self) -> int:
        """Krull dimension of the Stanley-Reisner ring (max facet size)."""
        return max((len(f) for f in self.facets), default=0)

    @property
    def dim(self) -> int:
        return self.d - 1

    @cached_property
    def _faces_by_size(self) -> tuple[tuple[Face, ...], ...]:
        if self.is_void:
            return ()
        seen: list[set[Face]] = [set() for _ in range(self.d + 1)]
        for f in self.facets:
            for k in range(len(f) + 1):
                seen[k].update(itertools.combinations(f, k))
        return tuple(tuple(sorted(s)) for s in seen)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        return frozenset(_mask(f) for fs in self._faces_by_size for f in fs)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces_of_dim(self, j: int) -> tuple[Face, ...]:
        if j < -1 or j + 1 >= len(self._faces_by_size):
            return ()
        return self._faces_by_size[j + 1]

    def faces(self) -> Iterable[Face]:
        for fs in self._faces_by_size:
            yield from fs

    def contains(self, face: Iterable[int]) -> bool:
        return _mask(face) in self.face_masks

    __contains__ = contains

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self._faces_by_size)

    def is_pure(self) -> bool:
        return all(len(f) == self.d for f in self.facets)

    def link(self, face: Iterable[int] = ()) -> "SimplicialComplex":
        F = tuple(sorted(face))
        if not self.contains(F):
            return SimplicialComplex(self.n, ())
        s = set(F)
        m = _mask(F)
        rest = (tuple(v for v in g if v not in s) for g in self.facets if _mask(g) & m == m)
        return SimplicialComplex(self.n, _minimal_facets(rest))

    def star(self, face: Iterable[int] = ()) -> "SimplicialComplex":
        F = tuple(sorted(face))
        if not self.contains(F):
            return SimplicialComplex(self.n, ())
        m = _mask(F)
        return SimplicialComplex(self.n, tuple(g for g in self.facets if _mask(g) & m == m))

    def deletion(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces disjoint from ``face``; for a single vertex this is the induced complex on the rest."""
        s = set(face)
        rest = (tuple(v for v in g if v not in s) for g in self.facets)
        return SimplicialComplex(self.n, _minimal_facets(rest))

    def __str__(self):
        body = " ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, dim={self.dim}: {body})"


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex, dropping facets contained in other facets."""
    clean = []
    for f in facets:
        face = tuple(sorted(set(int(v) for v in f)))
        if not face:
            raise EmptyInput("facets must be nonempty")
        if face[0] < 1 or face[-1] > n:
            raise VertexOutOfRange(f"facet {face} has a vertex outside [1..{n}]")
        clean.append(face)
    if not clean:
        raise EmptyInput("a complex needs at least one facet")
    return SimplicialComplex(n, _minimal_facets(clean))


def parse_facet_list(text: str) -> SimplicialComplex:
    """Parse ``n d`` on the first data line, then one facet per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty facet file")
    try:
        header = [int(t) for t in lines[0].split()]
        facets = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise ParseError("header must be 'n d'")
    n, d = header
    cx = from_facets(n, facets)
    if cx.d != d:
        raise ParseError(f"header says d={d} but the largest facet has {cx.d} vertices")
    return cx


def format_facet_list(cx: SimplicialComplex, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"{cx.n} {cx.d}")
    out.extend(" ".join(map(str, f)) for f in cx.facets)
    return "\n".join(out) + "\n"


def load(path: str | Path) -> SimplicialComplex:
    return parse_facet_list(Path(path).read_text())

