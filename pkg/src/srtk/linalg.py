"""Dense exact linear algebra over finite fields.

Elements are stored as ``int64`` numpy arrays.  For a prime field GF(p) an
element is its residue in ``[0, p)``.  For an extension GF(p^k) an element is
the integer whose base-p digits are the coefficients of a polynomial of
degree < k; the residues ``0..p-1`` are therefore the prime subfield under
both encodings, so integer matrices (e.g. signed incidence matrices) embed the
same way in either field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class Field:
    """Common interface; subclasses implement the elementwise operations."""

    char: int
    order: int

    def __call__(self, values) -> np.ndarray:
        """Embed integers (via their residue mod the characteristic)."""
        return np.mod(np.asarray(values, dtype=np.int64), self.char)

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def neg(self, a):
        return self.sub(np.zeros_like(np.asarray(a)), a)

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.order, size=shape, dtype=np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def prime_field(self) -> "PrimeField":
        return PrimeField(self.char)


@dataclass(frozen=True)
class PrimeField(Field):
    """GF(p) with modular int64 arithmetic."""

    p: int = 32003

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p >= 2**31:
            raise ValueError("modulus must be < 2**31 to keep products in int64")

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (np.asarray(a, dtype=np.int64) * b) % self.p

    def inv(self, a):
        a = int(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        inner = a.shape[1] if a.ndim == 2 else a.shape[0]
        # chunk the inner dimension so partial sums stay below 2**63
        step = max(1, (2**62) // max(1, (self.p - 1) ** 2))
        if inner <= step:
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for s in range(0, inner, step):
            out = (out + a[:, s:s + step] @ b[s:s + step]) % self.p
        return out

    def __repr__(self):
        return f"GF({self.p})"


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic of degree k
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return (prod + [0] * k)[:k]


def _is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            rem = list(poly)
            for i in range(len(rem) - 1, deg - 1, -1):
                c = rem[i]
                if c:
                    for j in range(deg + 1):
                        rem[i - deg + j] = (rem[i - deg + j] - c * divisor[j]) % p
            if not any(rem[:deg]):
                return False
    return True


def irreducible_modulus(p: int, k: int) -> list[int]:
    """First monic irreducible polynomial of degree k over GF(p), lowest coefficient first."""
    for tail in itertools.product(range(p), repeat=k):
        poly = list(reversed(tail)) + [1]
        if poly[0] == 0 and k > 1:
            continue
        if _is_irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class GaloisField(Field):
    """GF(p^k) for small p^k, with full addition and multiplication tables."""

    p: int
    k: int
    modulus: tuple = field(init=False, compare=False)

    MAX_ORDER = 256

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        q = self.p ** self.k
        if q > self.MAX_ORDER:
            raise ValueError(f"GF({self.p}^{self.k}) too large for table arithmetic")
        modulus = irreducible_modulus(self.p, self.k) if self.k > 1 else [0, 1]
        object.__setattr__(self, "modulus", tuple(modulus))
        digits = [self._digits(x) for x in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for x in range(q):
            for y in range(x, q):
                s = self._encode([(a + b) % self.p for a, b in zip(digits[x], digits[y])])
                m = self._encode(_poly_mulmod(digits[x], digits[y], modulus, self.p))
                add[x, y] = add[y, x] = s
                mul[x, y] = mul[y, x] = m
        neg = np.array([self._encode([(-a) % self.p for a in digits[x]]) for x in range(q)])
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            inv[x] = int(np.nonzero(mul[x] == 1)[0][0])
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _encode(self, digits) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p ** self.k

    def add(self, a, b):
        return self._add[a, b]

    def sub(self, a, b):
        return self._add[a, self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a, b]

    def inv(self, a):
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._inv[a])

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for t in range(a.shape[1]):
            out = self._add[out, self._mul[a[:, t, None], b[None, t, :]]]
        return out

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


def make_field(p: int = 32003, k: int = 1) -> Field:
    return PrimeField(p) if k == 1 else GaloisField(p, k)


def as_field(f) -> Field:
    if isinstance(f, Field):
        return f
    return PrimeField(int(f))


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form of a matrix; ``rows`` has identity on ``pivots``."""

    rows: np.ndarray
    pivots: tuple[int, ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(c for c in range(self.ncols) if c not in piv)


def rref(M, fld: Field) -> Echelon:
    """Gauss-Jordan elimination with first-nonzero pivoting (deterministic)."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = A.reshape(0 if A.size == 0 else 1, -1)
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = fld.mul(A[r], fld.inv(A[r, c]))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = fld.sub(A[hit], fld.mul(col[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return Echelon(A[:r], tuple(pivots), ncols)


def rank(M, fld: Field) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return rref(M, fld).rank


def kernel_basis(M, fld: Field) -> np.ndarray:
    """Basis of {v : M v = 0} as the rows of the returned array."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1] if M.ndim == 2 else 0
    if M.size == 0:
        return np.eye(ncols, dtype=np.int64)
    ech = rref(M, fld)
    free = ech.free
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        if ech.rank:
            basis[t, list(ech.pivots)] = fld.neg(ech.rows[:, f])
    return basis


@dataclass(frozen=True)
class QuotientBasis:
    """Coordinates for ``ambient / span``: the non-pivot columns of the span's RREF."""

    echelon: Echelon
    representatives: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def reduce(self, V: np.ndarray, fld: Field) -> np.ndarray:
        """Coordinates of the rows of V in the quotient (one row per input row)."""
        V = np.asarray(V, dtype=np.int64)
        if V.ndim == 1:
            V = V[None, :]
        ech = self.echelon
        if ech.rank and V.shape[0]:
            V = fld.sub(V, fld.matmul(V[:, list(ech.pivots)], ech.rows))
        return V[:, list(self.representatives)]


def quotient_basis(span_matrix, ambient_dim: int, fld: Field) -> QuotientBasis:
    S = np.asarray(span_matrix, dtype=np.int64)
    S = S.reshape(-1, ambient_dim) if ambient_dim else np.zeros((0, 0), dtype=np.int64)
    ech = rref(S, fld)
    return QuotientBasis(ech, ech.free)
