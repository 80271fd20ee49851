from fractions import Fraction

import mpmath
import pytest

from xlat.errors import NotIrreducible, NotSquarefree
from xlat.numtests import (
    NOT_ROR,
    RorWitness,
    cyclotomic_order,
    cyclotomic_polynomial,
    euler_phi,
    has_cyclotomic_factor,
    is_degenerate,
    is_ror,
    quotient_poly,
)
from xlat.polycore import graeffe, is_squarefree, poly
from xlat.rng import SplitMix64

EX1_G = poly([6, 0, 4, -4, 1])


class TestCyclotomic:
    def test_phi(self):
        assert [euler_phi(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_polynomials(self):
        assert cyclotomic_polynomial(1) == poly([-1, 1])
        assert cyclotomic_polynomial(2) == poly([1, 1])
        assert cyclotomic_polynomial(4) == poly([1, 0, 1])
        assert cyclotomic_polynomial(5) == poly([1, 1, 1, 1, 1])
        assert cyclotomic_polynomial(6) == poly([1, -1, 1])
        assert cyclotomic_polynomial(12) == poly([1, 0, -1, 0, 1])

    def test_orders(self):
        for d in range(1, 31):
            assert cyclotomic_order(cyclotomic_polynomial(d)) == d
        assert cyclotomic_order(poly([-2, 0, 1])) is None

    def test_detection_basics(self):
        assert has_cyclotomic_factor(poly([1, 0, 1]))[0]  # Phi_4
        assert not has_cyclotomic_factor(poly([-2, 0, 1]))[0]
        found, factors = has_cyclotomic_factor(poly([1, 1, 1, 1, 1]))
        assert found and factors == [poly([1, 1, 1, 1, 1])]

    def test_detection_planted(self):
        # Phi_d times noise is detected for every d <= 30
        rng = SplitMix64(303)
        for d in range(1, 31):
            noise = poly([rng.randint(1, 9), rng.randint(1, 9), 1])
            h = cyclotomic_polynomial(d) * noise
            found, factors = has_cyclotomic_factor(h)
            assert found
            assert cyclotomic_polynomial(d) in factors or any(
                cyclotomic_order(f) is not None for f in factors
            )

    def test_unit_modulus_but_not_cyclotomic(self):
        # 5x^2 - 6x + 5 has both roots on the unit circle yet is not cyclotomic
        assert not has_cyclotomic_factor(poly([5, -6, 5]))[0]


class TestQuotientPoly:
    def test_sqrt2(self):
        # roots of x^2 - 2: quotients {-1, -1} -> (x+1)^2
        assert quotient_poly(poly([-2, 0, 1])) == poly([1, 1]) ** 2

    def test_numeric_agreement(self):
        # root set of the quotient polynomial matches the numeric quotient set
        from xlat.polycore import squarefree_part

        mpmath.mp.dps = 40
        rng = SplitMix64(71)
        for _ in range(15):
            f = poly([rng.randint(-9, 9) for _ in range(3)] + [rng.randint(1, 9)])
            if f(0) == 0 or not is_squarefree(f):
                continue
            h = quotient_poly(f)
            assert h.degree == f.degree * (f.degree - 1)
            roots = mpmath.polyroots(list(reversed(f.coeffs)), maxsteps=150, extraprec=100)
            quots = [a / b for i, a in enumerate(roots) for j, b in enumerate(roots) if i != j]
            dedup = []
            for q in quots:
                if not any(abs(q - d) < 1e-20 for d in dedup):
                    dedup.append(q)
            hs = mpmath.polyroots(
                list(reversed(squarefree_part(h).coeffs)), maxsteps=300, extraprec=200
            )
            assert len(hs) == len(dedup)
            for q in dedup:
                assert min(abs(q - r) for r in hs) < 1e-15


class TestIsDegenerate:
    def test_example1_non_degenerate(self):
        assert is_degenerate(EX1_G) is False

    def test_sqrt2_degenerate(self):
        assert is_degenerate(poly([-2, 0, 1])) is True

    def test_golden_ratio_not(self):
        assert is_degenerate(poly([-1, -1, 1])) is False

    def test_cyclotomic_is_degenerate(self):
        assert is_degenerate(poly([1, 1, 1, 1, 1])) is True

    def test_requires_squarefree(self):
        with pytest.raises(NotSquarefree):
            is_degenerate(poly([1, 2, 1]))

    def test_numeric_oracle_agreement(self):
        # power-test oracle: some quotient q has q^d == 1 for small d
        mpmath.mp.dps = 60
        rng = SplitMix64(2024)
        checked = 0
        for _ in range(200):
            f = poly([rng.randint(-10, 10) for _ in range(4)] + [rng.randint(1, 10)])
            if f(0) == 0 or not is_squarefree(f):
                continue
            checked += 1
            roots = mpmath.polyroots(list(reversed(f.coeffs)), maxsteps=200, extraprec=200)
            numeric = False
            for i, a in enumerate(roots):
                for j, b in enumerate(roots):
                    if i == j:
                        continue
                    quot = a / b
                    if abs(abs(quot) - 1) < mpmath.mpf(10) ** -30:
                        for d in range(1, 105):
                            if abs(quot**d - 1) < mpmath.mpf(10) ** -30:
                                numeric = True
                                break
                    if numeric:
                        break
                if numeric:
                    break
            assert is_degenerate(f) == numeric, f.coeffs
            if checked >= 100:
                break
        assert checked >= 100


class TestIsRor:
    def test_sqrt2(self):
        assert is_ror(poly([-2, 0, 1])) == RorWitness(2, Fraction(2))

    def test_omega(self):
        assert is_ror(poly([1, 1, 1])) == RorWitness(3, Fraction(1))

    def test_gaussian_i(self):
        assert is_ror(poly([1, 0, 1])) == RorWitness(2, Fraction(-1))

    def test_example1_not_ror(self):
        assert is_ror(EX1_G) is NOT_ROR

    def test_linear(self):
        assert is_ror(poly([-3, 1])) == RorWitness(1, Fraction(3))
        assert is_ror(poly([1, 1])) == RorWitness(1, Fraction(-1))
        assert is_ror(poly([-1, 2])) == RorWitness(1, Fraction(1, 2))

    def test_phi5(self):
        assert is_ror(poly([1, 1, 1, 1, 1])) == RorWitness(5, Fraction(1))

    def test_radical_cubic(self):
        assert is_ror(poly([-2, 0, 0, 1])) == RorWitness(3, Fraction(2))

    def test_scaled_radical(self):
        # roots are the square roots of 3/2: minimal power 2 with value 3/2
        assert is_ror(poly([-3, 0, 2])) == RorWitness(2, Fraction(3, 2))

    def test_twisted_radical(self):
        # x^4 + 2: roots zeta_8^odd * 2^(1/4), fourth power = -2
        assert is_ror(poly([2, 0, 0, 0, 1])) == RorWitness(4, Fraction(-2))

    def test_golden_not_ror(self):
        assert is_ror(poly([-1, -1, 1])) is NOT_ROR

    def test_rejects_reducible(self):
        with pytest.raises(NotIrreducible):
            is_ror(poly([-1, 0, 1]))

    def test_witness_graeffe_identity(self):
        # for every witness: graeffe(g, m) == (x - q)^deg exactly
        cases = [
            poly([-2, 0, 1]),
            poly([1, 1, 1]),
            poly([1, 0, 1]),
            poly([1, 1, 1, 1, 1]),
            poly([-2, 0, 0, 1]),
            poly([2, 0, 0, 0, 1]),
            poly([-3, 0, 2]),
        ]
        for g in cases:
            w = is_ror(g)
            expected = poly([-w.q.numerator, w.q.denominator]) ** g.degree
            if expected.lc < 0:
                expected = -expected
            assert graeffe(g, w.m) == expected

    def test_witness_implies_degenerate(self):
        # consistency pair: RorWitness with deg >= 2 forces degeneracy
        for g in [poly([-2, 0, 1]), poly([1, 1, 1]), poly([1, 0, 1]), poly([1, 1, 1, 1, 1])]:
            assert isinstance(is_ror(g), RorWitness)
            assert is_degenerate(g) is True

    def test_minimality_of_m(self):
        # x^2 + 2: roots +-i sqrt2: square is -2 (not 4: m = 2 minimal)
        assert is_ror(poly([2, 0, 1])) == RorWitness(2, Fraction(-2))
