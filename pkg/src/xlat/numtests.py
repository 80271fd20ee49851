"""Algebraic-number predicates on polynomials.

* is_ror: does every root of an irreducible g have a rational m-th power?
* is_degenerate: is some quotient of two distinct roots a root of unity?
* has_cyclotomic_factor: cyclotomic-factor detection via the Graeffe-squaring
  fixed-point characterization, factor by factor.

The quotient polynomial (roots r_i / r_j, i != j) is assembled exactly from
power sums of f and of its reversed polynomial, then the diagonal (x-1)^n is
divided out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotIrreducible, NotSquarefree, ZeroConstantTerm
from .polycore import (
    UnivariatePolynomial,
    _graeffe_square,
    div_exact,
    factor_z,
    graeffe,
    is_irreducible_z,
    is_squarefree,
    poly,
    poly_from_power_sums,
    power_sums,
    squarefree_part,
)


@dataclass(frozen=True)
class RorWitness:
    """Minimal exponent m with all roots' m-th powers equal to the rational q."""

    m: int
    q: Fraction


class NotRor:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotRor"


NOT_ROR = NotRor()


# ---------------------------------------------------------------------------
# cyclotomic machinery

_cyclotomic_cache: dict = {}


def euler_phi(d: int) -> int:
    out = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out -= out // m
    return out


def cyclotomic_polynomial(d: int) -> UnivariatePolynomial:
    if d in _cyclotomic_cache:
        return _cyclotomic_cache[d]
    num = poly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = div_exact(num, cyclotomic_polynomial(e))
    _cyclotomic_cache[d] = num
    return num


def _is_cyclotomic_irreducible(f: UnivariatePolynomial) -> bool:
    """f irreducible over Q: True iff f is some cyclotomic polynomial.

    Repeated squarefree Graeffe squaring reaches a fixed point iff the root
    set is closed under squaring after finitely many steps, which for an
    irreducible polynomial happens exactly when all roots are roots of unity.
    Cyclotomics are monic with constant term +-1, and a monic integer
    polynomial with all roots on the unit circle has coefficients bounded by
    binomials, so violating either property along the way proves a root off
    the unit circle and the iteration can stop (this also keeps coefficient
    growth of non-cyclotomic inputs in check).
    """
    cur = f.primitive_part()
    if cur.lc < 0:
        cur = -cur
    k = f.degree
    if k < 1 or cur.lc != 1 or abs(cur[0]) != 1:
        return False
    height_cap = 2**k
    # order d has v_2(d) <= log2(2k^2); a couple of spare iterations for safety
    iterations = max(4, (2 * k * k).bit_length() + 2)
    for _ in range(iterations):
        nxt = squarefree_part(_graeffe_square(cur))
        if nxt == cur:
            return True
        if nxt.lc != 1 or abs(nxt[0]) != 1 or max(abs(c) for c in nxt.coeffs) > height_cap:
            return False
        cur = nxt
    return False


def cyclotomic_order(f: UnivariatePolynomial):
    """The d with f == Phi_d, or None."""
    k = f.degree
    if k < 1:
        return None
    g = f.primitive_part()
    if g.lc < 0:
        g = -g
    for d in range(1, 2 * k * k + 2):
        if euler_phi(d) == k and g == cyclotomic_polynomial(d):
            return d
    return None


def has_cyclotomic_factor(h: UnivariatePolynomial):
    """(found, list of cyclotomic factors of h)."""
    if h.is_zero:
        raise ValueError("zero polynomial")
    if h.degree < 1:
        return False, []
    found = []
    for g, _mult in factor_z(h).factors:
        if _is_cyclotomic_irreducible(g):
            found.append(g)
    return bool(found), found


# ---------------------------------------------------------------------------
# quotient polynomial


def quotient_poly(f: UnivariatePolynomial) -> UnivariatePolynomial:
    """Primitive polynomial with root multiset {r_i / r_j : i != j} (f squarefree,
    f(0) != 0); the n diagonal quotients are removed by exact division."""
    n = f.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    upto = n * n
    ps_f = power_sums(f, upto)
    ps_rev = power_sums(f.reversed_poly(), upto)
    q = [ps_f[t] * ps_rev[t] for t in range(upto + 1)]
    q[0] = Fraction(n * n)
    full = poly_from_power_sums(q, n * n)
    diag = poly([-1, 1]) ** n
    return div_exact(full, diag)


# ---------------------------------------------------------------------------
# predicates


def is_degenerate(f: UnivariatePolynomial) -> bool:
    """True iff some quotient of two distinct roots of f is a root of unity."""
    if f.is_zero or f(0) == 0:
        raise ZeroConstantTerm("degeneracy test needs f(0) != 0")
    if f.degree < 2:
        raise ValueError("degeneracy test needs degree >= 2")
    if not is_squarefree(f):
        raise NotSquarefree("degeneracy is defined for squarefree polynomials")
    found, _ = has_cyclotomic_factor(quotient_poly(f))
    return found


def is_ror(g: UnivariatePolynomial):
    """RorWitness(m, q) iff every root r of g satisfies r^m = q in Q, with m
    minimal; NotRor otherwise.

    For irreducible g the root quotients are all m-th roots of unity whenever
    the witness exists, so: every irreducible factor of the quotient
    polynomial must be cyclotomic, and then m divides n * lcm(orders), which
    reduces the search to the divisors of that number in increasing order.
    """
    if g.is_zero or g(0) == 0:
        raise ZeroConstantTerm("root-of-rational test needs g(0) != 0")
    if not is_irreducible_z(g):
        raise NotIrreducible("root-of-rational test needs an irreducible input")
    n = g.degree
    if n == 1:
        return RorWitness(1, Fraction(-g[0], g[1]))

    orders = []
    for factor, _mult in factor_z(quotient_poly(g)).factors:
        d = cyclotomic_order(factor)
        if d is None:
            return NOT_ROR
        orders.append(d)
    e = 1
    for d in orders:
        e = e * d // math.gcd(e, d)
    bound = e * n
    for m in sorted(d for d in range(1, bound + 1) if bound % d == 0):
        q = _all_roots_common_power(g, m)
        if q is not None:
            return RorWitness(m, q)
    raise AssertionError("all root quotients are roots of unity; a witness must exist")


def _all_roots_common_power(g: UnivariatePolynomial, m: int):
    """q with graeffe(g, m) == (x - q)^n, else None."""
    n = g.degree
    gm = graeffe(g, m)
    q = Fraction(-gm[n - 1], n * gm[n])
    cand = poly([-q.numerator, q.denominator]) ** n
    if cand.lc < 0:
        cand = -cand
    return q if gm == cand else None
