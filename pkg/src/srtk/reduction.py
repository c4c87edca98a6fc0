"""Artinian reductions K[Δ]/ℓ by a linear system of parameters.

Degree j of K[Δ] has the monomials whose support is a face as a basis.  The
reduction in degree j is that space modulo ℓ_1 [K[Δ]]_{j-1} + ... +
ℓ_d [K[Δ]]_{j-1}; its coordinates are the non-pivot monomials of the RREF
of the killed subspace.  Everything downstream (socles, the level quotient)
works on a :class:`GradedAlgebra`, i.e. per-degree dimensions plus the
matrices of multiplication by each variable.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .complex import Face, SimplicialComplex, _mask
from .homology import is_buchsbaum, is_two_cm, reduced_betti
from .linalg import Field, QuotientBasis, as_field, kernel_basis, quotient_basis, rank

log = logging.getLogger(__name__)

Monomial = tuple[int, ...]  # weakly increasing vertex ids, e.g. x1^2 x3 -> (1, 1, 3)


class LsopNotFound(RuntimeError):
    pass


class HypothesisFailed(ValueError):
    pass


@dataclass(eq=False)
class LinearForms:
    """Row i holds the coefficients of ℓ_i; column v-1 belongs to vertex v."""

    coeffs: np.ndarray
    field: Field
    seed: int | None = None

    @property
    def d(self) -> int:
        return self.coeffs.shape[0]

    def tolist(self) -> list[list[int]]:
        return self.coeffs.tolist()


def verify_lsop(cx: SimplicialComplex, forms: LinearForms) -> bool:
    """ℓ is an lsop iff its restriction to every facet's variables has full column rank."""
    L = np.asarray(forms.coeffs)
    if L.ndim != 2 or L.shape != (cx.d, cx.n):
        return False
    return all(rank(L[:, [v - 1 for v in F]], forms.field) == len(F) for F in cx.facets)


def random_lsop(cx: SimplicialComplex, fld=32003, seed: int = 0, max_attempts: int = 500) -> LinearForms:
    """Sample d random linear forms that pass :func:`verify_lsop`.

    Columns are drawn vertex by vertex and a draw is rejected as soon as it
    makes some partially assigned facet dependent; a whole attempt restarts
    when a vertex keeps failing.  Over large fields the first draw almost
    always works.
    """
    fld = as_field(fld)
    if fld.order <= cx.n:
        warnings.warn(f"field of order {fld.order} is small for {cx.n} vertices; an lsop may not exist",
                      stacklevel=2)
    d = cx.d
    rng = np.random.default_rng(seed)
    through = {v: [F for F in cx.facets if v in F] for v in cx.vertices}
    for attempt in range(max_attempts):
        L = fld.random((d, cx.n), rng)
        assigned: set[int] = set()
        for v in cx.vertices:
            for _ in range(min(4 * fld.order + 16, 256)):
                ok = True
                for F in through[v]:
                    cols = [u - 1 for u in F if u in assigned or u == v]
                    if rank(L[:, cols], fld) < len(cols):
                        ok = False
                        break
                if ok:
                    break
                L[:, v - 1] = fld.random(d, rng)
            else:
                break
            assigned.add(v)
        else:
            forms = LinearForms(L, fld, seed)
            if verify_lsop(cx, forms):
                if attempt:
                    log.debug("lsop found after %d restarts", attempt)
                return forms
    raise LsopNotFound(
        f"no lsop over {fld!r} after {max_attempts} attempts; "
        "use a larger prime or an extension field of the same characteristic")


@dataclass(eq=False)
class GradedAlgebra:
    """A standard graded artinian algebra given by its multiplication tables.

    ``mult[j][k]`` is the ``dims[j+1] x dims[j]`` matrix of multiplication by
    x_{k+1}.  ``dims`` runs far enough that its last entry is 0.
    """

    field: Field
    nvars: int
    dims: list[int]
    mult: list[np.ndarray]

    @property
    def top_degree(self) -> int:
        """Largest degree with a nonzero piece (the end of the algebra)."""
        return max(j for j, h in enumerate(self.dims) if h)

    def dim(self, j: int) -> int:
        return self.dims[j] if 0 <= j < len(self.dims) else 0

    def socle_basis(self, j: int) -> np.ndarray:
        """Rows span the elements of degree j killed by every variable."""
        h = self.dim(j)
        if h == 0:
            return np.zeros((0, 0), dtype=np.int64)
        if self.dim(j + 1) == 0:
            return np.eye(h, dtype=np.int64)
        stacked = self.mult[j].reshape(-1, h)
        return kernel_basis(stacked, self.field)

    def hilbert_function(self) -> tuple[int, ...]:
        return tuple(self.dims[: self.top_degree + 1])


@dataclass(eq=False)
class GradedReduction(GradedAlgebra):
    forms: LinearForms | None = None
    monomials: list[list[Monomial]] = field(default_factory=list)
    basis: list[list[Monomial]] = field(default_factory=list)


def face_monomials(cx: SimplicialComplex, top: int) -> list[list[Monomial]]:
    """Monomials of degree 0..top supported on faces, each list sorted lexicographically."""
    out: list[list[Monomial]] = [[()]]
    masks = cx.face_masks
    for _ in range(top):
        nxt = set()
        for m in out[-1]:
            mm = _mask(m)
            last = m[-1] if m else 1
            for v in range(last, cx.n + 1):
                if mm | (1 << v) in masks:
                    nxt.add(m + (v,))
        out.append(sorted(nxt))
    return out


def _product_table(prev: list[Monomial], cur: list[Monomial], n: int) -> np.ndarray:
    """T[i, v-1] = index of prev[i] * x_v in cur, or -1 if that product vanishes in K[Δ]."""
    index = {m: i for i, m in enumerate(cur)}
    T = np.full((len(prev), n), -1, dtype=np.int64)
    for i, m in enumerate(prev):
        for v in range(1, n + 1):
            T[i, v - 1] = index.get(tuple(sorted(m + (v,))), -1)
    return T


def graded_reduction(cx: SimplicialComplex, forms: LinearForms) -> GradedReduction:
    if not verify_lsop(cx, forms):
        raise ValueError("forms are not a linear system of parameters for this complex")
    fld = forms.field
    L = np.asarray(forms.coeffs, dtype=np.int64)
    d, n = cx.d, cx.n
    top = d + 2
    monos = face_monomials(cx, top)
    tables = [_product_table(monos[j], monos[j + 1], n) for j in range(top)]

    quotients: list[QuotientBasis] = [quotient_basis(np.zeros((0, 1), dtype=np.int64), 1, fld)]
    for j in range(1, top + 1):
        T = tables[j - 1]
        N_prev, N = len(monos[j - 1]), len(monos[j])
        kill = np.zeros((d, N_prev, N), dtype=np.int64)
        rows, vs = np.nonzero(T >= 0)
        kill[:, rows, T[rows, vs]] = L[:, vs]
        quotients.append(quotient_basis(kill.reshape(d * N_prev, N), N, fld))

    dims = [q.dim for q in quotients]
    if dims[d + 1] != 0:
        raise RuntimeError(f"reduction does not vanish in degree {d + 1}: dims={dims}")

    mult = []
    for j in range(top):
        reps = list(quotients[j].representatives)
        T = tables[j][reps]  # shape (dims[j], n)
        N_next = len(monos[j + 1])
        U = np.zeros((n, len(reps), N_next), dtype=np.int64)
        ks, rs = np.nonzero(T.T >= 0)
        U[ks, rs, T.T[ks, rs]] = 1
        images = quotients[j + 1].reduce(U.reshape(n * len(reps), N_next), fld)
        mult.append(images.reshape(n, len(reps), dims[j + 1]).transpose(0, 2, 1).copy())

    basis = [[monos[j][c] for c in q.representatives] for j, q in enumerate(quotients)]
    return GradedReduction(fld, n, dims, mult, forms, monos, basis)


@dataclass(frozen=True)
class SocleProfile:
    dims: dict[int, int]

    def __getitem__(self, j: int) -> int:
        return self.dims.get(j, 0)

    def nonzero(self) -> dict[int, int]:
        return {j: s for j, s in self.dims.items() if s}


def socle_profile(alg: GradedAlgebra) -> SocleProfile:
    return SocleProfile({j: alg.socle_basis(j).shape[0] for j in range(alg.top_degree + 1)})


def strip_socle(alg: GradedAlgebra, degrees) -> GradedAlgebra:
    """Quotient by the socle pieces in ``degrees`` (an ideal, since m kills it)."""
    fld = alg.field
    degrees = set(degrees)
    quotients = []
    for j, h in enumerate(alg.dims):
        span = alg.socle_basis(j) if j in degrees and h else np.zeros((0, h), dtype=np.int64)
        quotients.append(quotient_basis(span, h, fld))
    mult = []
    for j in range(len(alg.dims) - 1):
        src, dst = quotients[j], quotients[j + 1]
        maps = np.asarray(alg.mult[j])
        # the killed piece must map into the killed piece of the next degree
        killed = src.echelon.rows
        if killed.shape[0] and dst.dim:
            for k in range(alg.nvars):
                if dst.reduce(fld.matmul(killed, maps[k].T), fld).any():
                    raise RuntimeError(f"stripped subspace in degree {j} is not an ideal")
        reps = list(src.representatives)
        new = np.zeros((alg.nvars, dst.dim, len(reps)), dtype=np.int64)
        for k in range(alg.nvars):
            if reps and dst.dim:
                new[k] = dst.reduce(maps[k][:, reps].T, fld).T
        mult.append(new)
    return GradedAlgebra(fld, alg.nvars, [q.dim for q in quotients], mult)


@dataclass(frozen=True)
class LevelQuotient:
    dims: tuple[int, ...]
    socle: dict[int, int]
    d: int

    @property
    def type(self) -> int:
        return self.socle.get(max(self.socle), 0) if self.socle else 0

    @property
    def is_level(self) -> bool:
        return len(self.socle) == 1

    @property
    def socle_degree(self) -> int | None:
        return max(self.socle) if self.socle else None


def level_quotient_of(alg: GradedAlgebra, d: int) -> tuple[GradedAlgebra, LevelQuotient]:
    quot = strip_socle(alg, range(1, d))
    prof = socle_profile(quot).nonzero()
    return quot, LevelQuotient(quot.hilbert_function(), prof, d)


def level_quotient(cx: SimplicialComplex, fld=32003, seed: int = 0) -> LevelQuotient:
    fld = as_field(fld)
    R = graded_reduction(cx, random_lsop(cx, fld, seed))
    return level_quotient_of(R, cx.d)[1]


@dataclass
class SocleCheck:
    """Per-degree comparison of actual socle dimensions against binom(d, j) beta_{j-1}."""

    holds: bool
    rows: list[tuple[int, int, int]]  # (degree, actual, predicted)
    reason: str = ""
    seed: int | None = None
    reduction_dims: tuple[int, ...] = ()

    def __bool__(self):
        return self.holds

    @property
    def slack(self) -> dict[int, int]:
        return {j: actual - pred for j, actual, pred in self.rows}


def predicted_socle(cx: SimplicialComplex, p) -> dict[int, int]:
    beta = reduced_betti(cx, as_field(p).char)
    d = cx.d
    return {j: comb(d, j) * beta[j - 1] for j in range(1, d + 1)}


def _socle_rows(cx: SimplicialComplex, fld: Field, seed: int):
    R = graded_reduction(cx, random_lsop(cx, fld, seed))
    prof = socle_profile(R)
    pred = predicted_socle(cx, fld)
    return R, [(j, prof[j], pred[j]) for j in range(1, cx.d + 1)]


def is_buchsbaum_star(cx: SimplicialComplex, fld=32003, seed: int = 0) -> SocleCheck:
    """Buchsbaum* test: socle of K[Δ]/ℓ equals binom(d, j) beta_{j-1} in each degree j >= 1."""
    fld = as_field(fld)
    if not is_buchsbaum(cx, fld.char):
        return SocleCheck(False, [], "not Buchsbaum", seed)
    R, rows = _socle_rows(cx, fld, seed)
    bad = [j for j, a, e in rows if a != e]
    reason = "" if not bad else f"socle mismatch in degrees {bad}"
    return SocleCheck(not bad, rows, reason, seed, R.hilbert_function())


def socle_lower_bound_check(cx: SimplicialComplex, fld=32003, seed: int = 0) -> SocleCheck:
    """Lower bound dim Soc_j >= binom(d, j) beta_{j-1} for Buchsbaum Δ; slack is the excess."""
    fld = as_field(fld)
    if not is_buchsbaum(cx, fld.char):
        return SocleCheck(False, [], "not Buchsbaum", seed)
    R, rows = _socle_rows(cx, fld, seed)
    bad = [j for j, a, e in rows if a < e]
    reason = "" if not bad else f"socle below the bound in degrees {bad}"
    return SocleCheck(not bad, rows, reason, seed, R.hilbert_function())


@dataclass
class StarDeletionCheck:
    vertex: int
    rows: list[tuple[int, int, int, int]]  # (j, dim Δ_j, dim st_{j-1}, dim del_j)
    seed: int

    @property
    def holds(self) -> bool:
        return all(a == b + c for _, a, b, c in self.rows)

    def __bool__(self):
        return self.holds


def star_deletion_dim_check(cx: SimplicialComplex, k: int, fld=32003, seed: int = 0,
                            max_resamples: int = 20) -> StarDeletionCheck:
    """Dimension count of 0 -> K[st k]/ℓ(-1) -> K[Δ]/ℓ -> K[Δ_{-k}]/ℓ -> 0."""
    fld = as_field(fld)
    p = fld.char
    star, dele = cx.star((k,)), cx.deletion((k,))
    failures = []
    if not is_buchsbaum(cx, p):
        failures.append("complex is not Buchsbaum")
    if not is_two_cm(cx.link((k,)), p):
        failures.append(f"link of {k} is not 2-CM")
    if dele.d != cx.d:
        failures.append(f"deletion of {k} has dimension {dele.dim}, not {cx.dim}")
    elif not is_buchsbaum(dele, p):
        failures.append(f"deletion of {k} is not Buchsbaum")
    if failures:
        raise HypothesisFailed("; ".join(failures))

    for attempt in range(max_resamples):
        forms = random_lsop(cx, fld, seed + attempt)
        if verify_lsop(star, forms) and verify_lsop(dele, forms):
            break
    else:
        raise LsopNotFound("no common lsop for complex, star and deletion")
    A = graded_reduction(cx, forms)
    B = graded_reduction(star, forms)
    C = graded_reduction(dele, forms)
    rows = [(j, A.dim(j), B.dim(j - 1), C.dim(j)) for j in range(cx.d + 2)]
    return StarDeletionCheck(k, rows, forms.seed)
