"""Face-vector calculus: f <-> h, the h' and h'' vectors, Macaulay-type
growth bounds for modules generated in degree zero, and the face-number
inequalities for Buchsbaum* complexes.

All arithmetic is on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .homology import BettiTable


class LengthMismatch(ValueError):
    pass


class ExpansionImpossible(ValueError):
    pass


class BettiZero(ValueError):
    pass


def binom(a: int, j: int) -> int:
    """a(a-1)...(a-j+1)/j! for j > 0, 1 for j == 0, 0 for j < 0; a may be negative."""
    if j < 0:
        return 0
    if j == 0:
        return 1
    return prod(range(a - j + 1, a + 1)) // factorial(j)


def h_from_f(f: Sequence[int], d: int) -> tuple[int, ...]:
    """``f = (f_{-1}, ..., f_{d-1})`` to ``h = (h_0, ..., h_d)``."""
    if len(f) != d + 1:
        raise LengthMismatch(f"f-vector of length {len(f)} for d={d}")
    return tuple(
        sum((-1) ** (j - i) * binom(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int) -> tuple[int, ...]:
    if len(h) != d + 1:
        raise LengthMismatch(f"h-vector of length {len(h)} for d={d}")
    return tuple(sum(binom(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))


def h_prime(h: Sequence[int], betti: BettiTable, d: int) -> tuple[int, ...]:
    return tuple(
        h[j] + binom(d, j) * sum((-1) ** (j - i - 1) * betti[i - 1] for i in range(j))
        for j in range(d + 1)
    )


def h_double_prime(hp: Sequence[int], betti: BettiTable, d: int) -> tuple[int, ...]:
    out = [hp[j] - binom(d, j) * betti[j - 1] for j in range(d)]
    out.append(betti[d - 1])
    return tuple(out)


@dataclass(frozen=True)
class BinomialExpansion:
    """b = m_top * C(n-1+d, d) + C(m_d, d) + C(m_{d-1}, d-1) + ... + C(m_s, s).

    ``ms`` lists (i, m_i) pairs from i = d downwards.
    """

    b: int
    n: int
    d: int
    m_top: int = 0
    ms: tuple[tuple[int, int], ...] = ()

    @property
    def s(self) -> int:
        return self.ms[-1][0] if self.ms else self.d + 1

    def value(self) -> int:
        return self.m_top * binom(self.n - 1 + self.d, self.d) + sum(binom(m, i) for i, m in self.ms)

    def growth(self) -> int:
        if self.b == 0:
            return 0
        return self.m_top * binom(self.n + self.d, self.d + 1) + sum(binom(m + 1, i + 1) for i, m in self.ms)

    def __str__(self):
        terms = []
        if self.m_top:
            terms.append(f"{self.m_top}*C({self.n - 1 + self.d},{self.d})")
        terms += [f"C({m},{i})" for i, m in self.ms]
        return " + ".join(terms) if terms else "0"


def d_binomial_expansion(b: int, n: int, d: int) -> BinomialExpansion:
    if b < 0 or n < 1 or d < 0:
        raise ExpansionImpossible(f"no {d}-binomial expansion of b={b} with n={n}")
    if b == 0:
        return BinomialExpansion(0, n, d)
    block = binom(n - 1 + d, d)
    m_top, r = divmod(b, block)
    ms = []
    for i in range(d, 0, -1):
        if r == 0:
            break
        m = i
        while binom(m + 1, i) <= r:
            m += 1
        ms.append((i, m))
        r -= binom(m, i)
    exp = BinomialExpansion(b, n, d, m_top, tuple(ms))
    if r or (ms and ms[0][1] > n + d - 2) or exp.value() != b:
        raise ExpansionImpossible(f"expansion of {b} violates the constraints for n={n}, d={d}")
    return exp


def macaulay_growth(b: int, n: int, d: int) -> int:
    """b^<d>: the largest degree-(d+1) value after b in a module generated in degree 0."""
    return d_binomial_expansion(b, n, d).growth()


@dataclass
class BoundRow:
    label: str
    j: int
    lhs: int | Fraction
    rhs: int | Fraction
    relation: str  # "<=", ">=" or "=="
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        return self.lhs == self.rhs


@dataclass
class BoundReport:
    rows: list[BoundRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def __bool__(self):
        return self.ok

    def failures(self) -> list[BoundRow]:
        return [r for r in self.rows if not r.ok]


def check_module_macaulay(hfun: Sequence[int], n: int) -> BoundReport:
    """h(j+1) <= h(j)^<j> for every j, i.e. h can be the Hilbert function of a module generated in degree 0."""
    rows = [BoundRow("nonnegative", j, v, 0, ">=") for j, v in enumerate(hfun) if v < 0]
    for j in range(len(hfun) - 1):
        if hfun[j] >= 0:
            rows.append(BoundRow("macaulay", j, hfun[j + 1], macaulay_growth(hfun[j], n, j), "<="))
    return BoundReport(rows)


@dataclass(frozen=True)
class HVectorBundle:
    n: int
    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    h_prime: tuple[int, ...]
    h_double_prime: tuple[int, ...]
    betti: BettiTable

    @classmethod
    def from_f(cls, n: int, f: Sequence[int], betti: BettiTable) -> "HVectorBundle":
        d = len(f) - 1
        h = h_from_f(f, d)
        hp = h_prime(h, betti, d)
        return cls(n, d, tuple(f), h, hp, h_double_prime(hp, betti, d), betti)

    @classmethod
    def of(cls, cx, p=32003) -> "HVectorBundle":
        from .homology import reduced_betti

        return cls.from_f(cx.n, cx.f_vector(), reduced_betti(cx, p))


def check_bstar_bounds(bundle: HVectorBundle, part_b: bool = True) -> BoundReport:
    """Face-number restrictions for a Buchsbaum* complex, each inequality as a row."""
    n, d, hp, hpp, beta = bundle.n, bundle.d, bundle.h_prime, bundle.h_double_prime, bundle.betti
    rows = [
        BoundRow("h'_0", 0, hp[0], 1, "=="),
        BoundRow("h''_0", 0, hpp[0], 1, "=="),
        BoundRow("h''_d", d, hpp[d], beta[d - 1], "=="),
    ]
    if d >= 1:
        rows += [BoundRow("h'_1", 1, hp[1], n - d, "=="), BoundRow("h''_1", 1, hpp[1], n - d, "==")]
    rows += [BoundRow("nonnegative", j, v, 0, ">=") for j, v in enumerate(hpp) if v < 0]
    for j in range(1, d - 1):
        if hpp[j] < 0 or hpp[j + 2] < 0:
            continue
        forward = macaulay_growth(hpp[j], n, j)
        backward = macaulay_growth(hpp[j + 2], n, d - j - 2) + beta[j] * binom(d, j + 1)
        rows.append(BoundRow("(a)", j, hp[j + 1], min(forward, backward), "<=",
                             {"forward": forward, "backward": backward}))
    if part_b:
        top = beta[d - 1]
        if top == 0:
            raise BettiZero("part (b) needs beta_{d-1} != 0")
        for j in range(1, d):
            rows.append(BoundRow("(b)", j, hpp[d - j], Fraction(hpp[j], top), ">="))
    return BoundReport(rows)


def _det3(m) -> int:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def soderberg_matrix(hpp: Sequence[int], n: int, d: int, j: int) -> list[list[int]]:
    def h(i):
        return hpp[i] if 0 <= i < len(hpp) else 0

    def r(i):
        return binom(n - 1 + i, i)

    return [
        [h(j - 1), h(j), h(j + 1)],
        [r(j - 1), r(j), r(j + 1)],
        [r(d - j + 1), r(d - j), r(d - j - 1)],
    ]


def soderberg_check(hpp: Sequence[int], n: int, d: int) -> BoundReport:
    """Determinantal condition on a level h-vector; outside j in [-1, d+1] the top row is zero."""
    if len(hpp) != d + 1:
        raise LengthMismatch(f"h''-vector of length {len(hpp)} for d={d}")
    rows = [BoundRow("soderberg", j, _det3(soderberg_matrix(hpp, n, d, j)), 0, ">=")
            for j in range(-1, d + 2)]
    return BoundReport(rows)
