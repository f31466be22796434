"""Siegel functions, the Klein form, Weierstrass p-values and Weierstrass units.

Index vectors (r, s) are rational pairs outside Z^2.  The q-product for a
Siegel function is taken with 0 <= r < 1; callers transporting indices by an
SL2(Z) matrix must normalize the first coordinate themselves (the 12N-th power
is insensitive to the choice, the bare function is not).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .cycloq import Cyclotomic, e_of
from .qseries import PuiseuxSeries, product_family
from .classical import eta


@dataclass(frozen=True)
class FracVector:
    """A rational row vector (r, s) indexing a Siegel function or p-value."""

    r: Fraction
    s: Fraction

    def __init__(self, r, s):
        object.__setattr__(self, "r", Fraction(r))
        object.__setattr__(self, "s", Fraction(s))

    def is_integral(self) -> bool:
        return self.r.denominator == 1 and self.s.denominator == 1

    def reduced_mod_1(self) -> "FracVector":
        return FracVector(self.r % 1, self.s % 1)

    def __neg__(self) -> "FracVector":
        return FracVector(-self.r, -self.s)

    def denominator_level(self) -> int:
        """The smallest N with (r, s) in (1/N)Z^2."""
        return math.lcm(self.r.denominator, self.s.denominator)


@dataclass(frozen=True)
class GammaMatrix:
    """An SL2(Z) matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("matrix must have determinant 1")

    def __matmul__(self, other: "GammaMatrix") -> "GammaMatrix":
        return GammaMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)


def bernoulli2(x) -> Fraction:
    """The second Bernoulli polynomial x^2 - x + 1/6, evaluated exactly."""
    x = Fraction(x)
    return x * x - x + Fraction(1, 6)


def frac_part(x) -> Fraction:
    return Fraction(x) % 1


def transform_vector(g: GammaMatrix, v: FracVector) -> FracVector:
    """The transpose action: (r, s) -> (a*r + c*s, b*r + d*s)."""
    return FracVector(g.a * v.r + g.c * v.s, g.b * v.r + g.d * v.s)


def siegel_function(v: FracVector, trunc) -> PuiseuxSeries:
    """Exact q-product of the Siegel function indexed by (r, s), 0 <= r < 1.

    Leading exponent is B2(r)/2; coefficients lie in a cyclotomic field
    determined by s and the prefactor e^(pi*i*s*(r-1)).
    """
    if v.is_integral():
        raise ValueError("index vector must lie outside Z^2")
    r, s = v.r, v.s
    if not 0 <= r < 1:
        raise ValueError(f"first coordinate must satisfy 0 <= r < 1, got {r}")
    trunc = Fraction(trunc)
    lead = bernoulli2(r) / 2
    rel = trunc - lead
    if rel <= 0:
        raise ValueError("trunc must exceed the leading exponent")
    prefactor = -e_of(s * (r - 1) / 2)
    factors = []
    if r == 0:
        # (1 - e(s)) is a nonzero constant since s is not integral here
        prefactor = prefactor * (Cyclotomic.one() - e_of(s))
    else:
        factors.append((e_of(s), r, 1))
    n = 1
    while n - r < rel or n + r < rel:
        factors.append((e_of(s), n + r, 1))
        factors.append((e_of(-s), n - r, 1))
        n += 1
    prod = product_family(factors, rel)
    return PuiseuxSeries.monomial(prefactor, lead, trunc) * prod


def siegel_power_ord(v: FracVector, N: int) -> Fraction:
    """Order in q of the 12N-th Siegel power: 6*N*B2(<r>)."""
    return 6 * N * bernoulli2(frac_part(v.r))


def klein_form_0_half(trunc) -> PuiseuxSeries:
    """The Klein form at (0, 1/2): (1/2 pi i) * g_(0,1/2) / eta^2."""
    trunc = Fraction(trunc)
    pad = trunc + 1
    g = siegel_function(FracVector(0, Fraction(1, 2)), pad)
    series = g * eta(pad) ** (-2)
    return series.truncated_to(min(series.trunc, trunc)).with_two_pi_i_power(-1)


def wp_expansion(v: FracVector, trunc) -> PuiseuxSeries:
    """Fourier expansion of the Weierstrass p-value at z = r*tau + s on [tau, 1].

    Returns (2 pi i)^2 * (1/12 + w/(1-w)^2 + sum_{n>=1} [...]) with
    w = q^r e(s) substituted, giving a Puiseux series with cyclotomic
    coefficients.  The expansion is certified against a lattice-sum oracle.
    """
    v = v.reduced_mod_1()
    if v.is_integral():
        raise ValueError("index vector must lie outside Z^2")
    r, s = v.r, v.s
    trunc = Fraction(trunc)
    series = PuiseuxSeries.monomial(Fraction(1, 12), 0, trunc, two_pi_i_power=2)

    def geom_terms(exponent: Fraction, zeta: Cyclotomic):
        # u/(1-u)^2 = sum_{k>=1} k u^k with u = q^exponent * zeta
        out = PuiseuxSeries.zero(trunc, two_pi_i_power=2)
        k = 1
        zk = zeta
        while k * exponent < trunc:
            out = out + PuiseuxSeries.monomial(zk * k, k * exponent, trunc, two_pi_i_power=2)
            k += 1
            zk = zk * zeta
        return out

    if r == 0:
        w = e_of(s)
        const = w / (Cyclotomic.one() - w) ** 2
        series = series + PuiseuxSeries.monomial(const, 0, trunc, two_pi_i_power=2)
    else:
        series = series + geom_terms(r, e_of(s))
    n = 1
    while n - r < trunc:
        series = series + geom_terms(n + r, e_of(s))
        series = series + geom_terms(n - r, e_of(-s))
        series = series - geom_terms(Fraction(n), Cyclotomic.one()).scaled(2)
        n += 1
    return series


def wp_lattice_sum(v: FracVector, tau: complex, m_max: int = 200) -> complex:
    """Numeric p(r*tau + s; [tau, 1]) by row-wise (Eisenstein) lattice summation.

    Each row sum over the second lattice coordinate is evaluated in closed
    form as pi^2/sin^2, so the remaining sum over rows converges geometrically;
    rows are cut at m_max.
    """
    v = v.reduced_mod_1()
    if v.is_integral():
        raise ValueError("index vector must lie outside Z^2")
    z = complex(v.r) * tau + complex(v.s)

    def inv_sin_sq(w: complex) -> complex:
        # 1/sin^2(w) = -4u/(1-u)^2 with u = e^(2iw); pick the decaying branch
        if w.imag < 0:
            w = -w
        u = cmath.exp(2j * w)
        return -4 * u / (1 - u) ** 2

    pi = cmath.pi
    total = pi**2 * inv_sin_sq(pi * z) - pi**2 / 3
    for m in range(1, m_max + 1):
        row = (
            pi**2 * inv_sin_sq(pi * (z - m * tau))
            + pi**2 * inv_sin_sq(pi * (z + m * tau))
            - 2 * pi**2 * inv_sin_sq(pi * (m * tau))
        )
        total += row
        if abs(row) < 1e-17 * max(1.0, abs(total)):
            break
    return total


def weierstrass_unit(v1: FracVector, w1: FracVector, v2: FracVector, w2: FracVector, trunc) -> PuiseuxSeries:
    """(p_v1 - p_w1)/(p_v2 - p_w2), a weight-0 modular unit series."""
    for a, b in ((v1, w1), (v2, w2)):
        if _congruent_up_to_sign(a, b):
            raise ValueError(f"degenerate index pair {a} ~ +-{b} (mod Z^2)")
    trunc = Fraction(trunc)
    pad = trunc + 2
    num = wp_expansion(v1, pad) - wp_expansion(w1, pad)
    den = wp_expansion(v2, pad) - wp_expansion(w2, pad)
    out = num * den.inverse()
    return out.truncated_to(min(out.trunc, trunc))


def _congruent_up_to_sign(a: FracVector, b: FracVector) -> bool:
    same = (a.r - b.r).denominator == 1 and (a.s - b.s).denominator == 1
    opp = (a.r + b.r).denominator == 1 and (a.s + b.s).denominator == 1
    return same or opp


def h1N(N: int, trunc) -> PuiseuxSeries:
    """The level-N generator (p_(0,1/N) - p_(0,1/2)) / (p_(0,1/2) - p_(0,1/4))."""
    if N < 2:
        raise ValueError("N must be at least 2")
    return weierstrass_unit(
        FracVector(0, Fraction(1, N)),
        FracVector(0, Fraction(1, 2)),
        FracVector(0, Fraction(1, 2)),
        FracVector(0, Fraction(1, 4)),
        trunc,
    )


def hN(N: int, trunc) -> PuiseuxSeries:
    """The level-N generator (p_(1/N,0) - p_(0,1/2)) / (p_(0,1/2) - p_(0,1/4))."""
    if N < 2:
        raise ValueError("N must be at least 2")
    return weierstrass_unit(
        FracVector(Fraction(1, N), 0),
        FracVector(0, Fraction(1, 2)),
        FracVector(0, Fraction(1, 2)),
        FracVector(0, Fraction(1, 4)),
        trunc,
    )


def g14(trunc) -> PuiseuxSeries:
    """g_(1/4,0)(4 tau)^(-8) * g_(1/2,0)(4 tau)^8, with leading exponent -1."""
    trunc = Fraction(trunc)
    rel = trunc / 4 + 2
    a = siegel_function(FracVector(Fraction(1, 4), 0), rel).substitute_q_power(4) ** (-8)
    b = siegel_function(FracVector(Fraction(1, 2), 0), rel).substitute_q_power(4) ** 8
    out = a * b
    return out.truncated_to(min(out.trunc, trunc))
