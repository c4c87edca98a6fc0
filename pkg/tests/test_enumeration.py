import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS
from oracles import admissible_tails
from srtk import builtin
from srtk.enumeration import (BettiZero, ExpansionImpossible, HVectorBundle, LengthMismatch, binom,
                              check_bstar_bounds, check_module_macaulay, d_binomial_expansion, f_from_h,
                              h_double_prime, h_from_f, h_prime, macaulay_growth, soderberg_check,
                              soderberg_matrix)
from srtk.homology import BettiTable


def test_binom_convention():
    assert binom(5, 0) == 1 and binom(-3, 0) == 1
    assert binom(4, -1) == 0
    assert binom(2, 3) == 0
    assert binom(-1, 2) == 1  # (-1)(-2)/2
    assert all(binom(a, j) == sympy.binomial(a, j) for a in range(-5, 8) for j in range(0, 6))


@pytest.mark.parametrize("f,d,h", [
    ((1, 3, 3), 2, (1, 1, 1)),
    ((1, 6, 15, 10), 3, (1, 3, 6, 0)),
    ((1, 7, 21, 14), 3, (1, 4, 10, -1)),
])
def test_h_from_f(f, d, h):
    assert h_from_f(f, d) == h
    assert f_from_h(h, d) == f


def test_h_length_mismatch():
    with pytest.raises(LengthMismatch):
        h_from_f((1, 3), 2)


@pytest.mark.parametrize("name", CORPUS)
def test_f_h_roundtrip(name):
    f = builtin(name).f_vector()
    d = len(f) - 1
    assert f_from_h(h_from_f(f, d), d) == f


def test_h_from_f_matches_generating_function():
    t = sympy.symbols("t")
    for name in CORPUS:
        f = builtin(name).f_vector()
        d = len(f) - 1
        lhs = sum(c * t ** j for j, c in enumerate(h_from_f(f, d)))
        rhs = sympy.expand(sympy.cancel(sum(fj * t ** j * (1 - t) ** (d - j) for j, fj in enumerate(f))))
        assert sympy.expand(lhs - rhs) == 0


@pytest.mark.parametrize("h,betti,d,hp", [
    ((1, 1, 1), (0, 0, 1), 2, (1, 1, 1)),
    ((1, 3, 6, 0), (0, 0, 1, 1), 3, (1, 3, 6, 1)),
    ((1, 4, 10, -1), (0, 0, 2, 1), 3, (1, 4, 10, 1)),
])
def test_h_prime(h, betti, d, hp):
    assert h_prime(h, BettiTable(2, betti), d) == hp


@pytest.mark.parametrize("hp,betti,d,hpp", [
    ((1, 3, 6, 1), (0, 0, 1, 1), 3, (1, 3, 3, 1)),
    ((1, 4, 10, 1), (0, 0, 2, 1), 3, (1, 4, 4, 1)),
    ((1, 1, 1, 1), (0, 0, 0, 1), 3, (1, 1, 1, 1)),
])
def test_h_double_prime(hp, betti, d, hpp):
    assert h_double_prime(hp, BettiTable(2, betti), d) == hpp


def test_h_double_prime_alternative_form():
    # h''_j = h_j + C(d,j) * sum_{i<=j} (-1)^{j-i-1} beta_{i-1} for j < d
    for name, p in [("torus7", 32003), ("rp2_6", 2), ("wedge_two_circles", 32003)]:
        b = HVectorBundle.of(builtin(name), p)
        for j in range(b.d):
            alt = b.h[j] + binom(b.d, j) * sum((-1) ** (j - i - 1) * b.betti[i - 1] for i in range(j + 1))
            assert b.h_double_prime[j] == alt


def test_expansion_examples():
    e = d_binomial_expansion(7, 3, 2)
    assert (e.m_top, e.ms) == (1, ((2, 2),))
    e = d_binomial_expansion(12, 3, 2)
    assert (e.m_top, e.ms, e.s) == (2, (), 3)
    assert d_binomial_expansion(0, 3, 2).ms == ()
    assert macaulay_growth(0, 3, 2) == 0
    assert macaulay_growth(7, 3, 2) == 11
    assert macaulay_growth(13, 3, 2) == 21
    with pytest.raises(ExpansionImpossible):
        d_binomial_expansion(-1, 3, 2)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 5))
def test_expansion_unique_by_exhaustive_search(n, d):
    tails = admissible_tails(n, d)
    block = binom(n - 1 + d, d)
    prev = 0
    for b in range(0, 201):
        sols = [(top, tail) for top in range(b // block + 1)
                for tail in tails.get(b - top * block, [])]
        if b == 0:
            assert d_binomial_expansion(0, n, d).growth() == 0
            continue
        assert len(sols) == 1, (b, n, d, sols)
        e = d_binomial_expansion(b, n, d)
        assert (e.m_top, e.ms) == sols[0]
        assert e.value() == b
        assert (e.s == d + 1) == (b % block == 0)
        g = e.growth()
        assert g >= prev
        prev = g


def test_check_module_macaulay():
    n = 4
    full = [binom(n - 1 + j, j) for j in range(5)]
    rep = check_module_macaulay(full, n)
    assert rep.ok and all(r.lhs == r.rhs for r in rep.rows)
    rep = check_module_macaulay((1, 3, 7), 3)
    assert not rep.ok and [r.j for r in rep.failures()] == [1]
    assert rep.rows[1].rhs == 6
    assert check_module_macaulay((1, 4, 4, 1)[::-1], 7).ok


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 300))
def test_growth_is_polynomial_ring_maximum(n, d, b):
    # a free module of rank m over n variables attains m * C(n+d, d+1) from m * C(n-1+d, d)
    block = binom(n - 1 + d, d)
    m = b // block
    assert macaulay_growth(m * block, n, d) == m * binom(n + d, d + 1)


def torus_bundle(p=32003):
    return HVectorBundle.of(builtin("torus7"), p)


def test_bstar_bounds_torus():
    rep = check_bstar_bounds(torus_bundle())
    assert rep.ok
    a = [r for r in rep.rows if r.label == "(a)"]
    assert [(r.j, r.lhs, r.detail["forward"], r.detail["backward"]) for r in a] == [(1, 10, 10, 13)]
    b = [r for r in rep.rows if r.label == "(b)"]
    assert (b[0].lhs, b[0].rhs) == (4, 4)


def test_bstar_bounds_rp2():
    rep = check_bstar_bounds(HVectorBundle.of(builtin("rp2_6"), 2))
    assert rep.ok
    b1 = [r for r in rep.rows if r.label == "(b)" and r.j == 1][0]
    assert (b1.lhs, b1.rhs) == (3, Fraction(3))


def test_bstar_bounds_betti_zero():
    bundle = HVectorBundle.of(builtin("rp2_6"), 3)
    with pytest.raises(BettiZero):
        check_bstar_bounds(bundle)
    assert check_bstar_bounds(bundle, part_b=False).rows


def test_soderberg_torus_value():
    m = soderberg_matrix((1, 4, 4, 1), 7, 3, 2)
    assert m[1] == [7, 28, 84]
    assert sympy.Matrix(m).det() == 6405
    rep = soderberg_check((1, 4, 4, 1), 7, 3)
    assert rep.ok
    assert {r.j: r.lhs for r in rep.rows}[2] == 6405


@pytest.mark.parametrize("hpp,n,d", [((1, 3, 3, 1), 6, 3), ((1, 1, 1, 1), 4, 3), ((1, 1, 1, 1, 1), 5, 4)])
def test_soderberg_passes(hpp, n, d):
    rep = soderberg_check(hpp, n, d)
    assert rep.ok
    for r in rep.rows:
        assert r.lhs == sympy.Matrix(soderberg_matrix(hpp, n, d, r.j)).det()


def test_negative_entries_fail_instead_of_raising():
    rep = check_module_macaulay((1, 3, -1, 2), 5)
    assert not rep.ok and [(r.label, r.j) for r in rep.failures()] == [("nonnegative", 2)]
    bowtie = HVectorBundle.of(builtin("bowtie_filled"))
    assert any(v < 0 for v in bowtie.h_prime)
    assert not check_module_macaulay(bowtie.h_prime, bowtie.n)
