"""q-expansions of the classical modular objects: eta, theta, g2/g3, Delta, j.

The Eisenstein lattice sums are not summed directly; the standard divisor-sum
q-expansions are used, with every normalization pinned by the Delta = eta^24
and j-coefficient checks in the test suite.
"""
from __future__ import annotations

from fractions import Fraction

from .qseries import PuiseuxSeries, product_family


def eta(trunc) -> PuiseuxSeries:
    """Dedekind eta: q^(1/24) * prod_{n>=1} (1 - q^n)."""
    trunc = Fraction(trunc)
    if trunc <= Fraction(1, 24):
        raise ValueError("trunc must exceed 1/24")
    rel = trunc - Fraction(1, 24)
    prod = product_family(((1, n, 1) for n in range(1, int(rel) + 2)), rel)
    return PuiseuxSeries.monomial(1, Fraction(1, 24), trunc) * prod


def theta_classical(which: int, trunc) -> PuiseuxSeries:
    """Jacobi theta constants as series in q = e^(2 pi i tau).

    theta2 = sum q^((n+1/2)^2/2), theta3 = sum q^(n^2/2),
    theta4 = sum (-1)^n q^(n^2/2).
    """
    trunc = Fraction(trunc)
    if which == 2:
        # exponents (2n+1)^2/8; n and -n-1 give the same exponent
        terms: dict[int, Fraction] = {}
        n = 0
        while Fraction((2 * n + 1) ** 2, 8) < trunc:
            terms[(2 * n + 1) ** 2] = Fraction(2)
            n += 1
        return PuiseuxSeries(8, terms, trunc)
    if which in (3, 4):
        terms = {0: Fraction(1)}
        n = 1
        while Fraction(n * n, 2) < trunc:
            sign = -1 if (which == 4 and n % 2) else 1
            terms[n * n] = Fraction(2 * sign)
            n += 1
        return PuiseuxSeries(2, terms, trunc)
    raise ValueError(f"theta index must be 2, 3 or 4, got {which}")


def _sigma(k: int, n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def _eisenstein_weight(weight: int, constant: int, trunc) -> dict[int, Fraction]:
    terms = {0: Fraction(1)}
    n = 1
    while n < trunc:
        terms[n] = Fraction(constant * _sigma(weight - 1, n))
        n += 1
    return terms


def eisenstein(which: str, trunc) -> PuiseuxSeries:
    """g2 = (2 pi i)^4 * E4/12 and g3 = (2 pi i)^6 * (-E6/216)."""
    trunc = Fraction(trunc)
    if which == "g2":
        terms = _eisenstein_weight(4, 240, trunc)
        series = PuiseuxSeries(1, terms, trunc, two_pi_i_power=4)
        return series.scaled(Fraction(1, 12))
    if which == "g3":
        terms = _eisenstein_weight(6, -504, trunc)
        series = PuiseuxSeries(1, terms, trunc, two_pi_i_power=6)
        return series.scaled(Fraction(-1, 216))
    raise ValueError(f"unknown Eisenstein name {which!r}")


def discriminant(trunc) -> PuiseuxSeries:
    """Delta = g2^3 - 27*g3^2, a (2 pi i)^12-tagged series with leading term q."""
    trunc = Fraction(trunc)
    g2 = eisenstein("g2", trunc)
    g3 = eisenstein("g3", trunc)
    return (g2**3 - (g3**2).scaled(27)).truncated_to(trunc)


def j_function(trunc) -> PuiseuxSeries:
    """The elliptic modular function, computed as 1728 * g2^3 / Delta."""
    trunc = Fraction(trunc)
    pad = trunc + 2
    g2 = eisenstein("g2", pad)
    num = (g2**3).scaled(1728)
    j = num * discriminant(pad).inverse()
    return j.truncated_to(min(j.trunc, trunc))
