"""Independent oracles used to freeze expected values.

Nothing here touches the fan, Chow ring or Koszul machinery: these are
closed formulas and brute-force counts over plain integers.
"""

from fractions import Fraction
from itertools import product
from math import comb, prod


def series_coefficients(weights, degrees, order):
    """Coefficients of prod(1 + w H) / prod(1 + d H) up to H^order."""
    poly = [Fraction(1)] + [Fraction(0)] * order
    for w in weights:
        poly = [poly[k] + (w * poly[k - 1] if k else 0) for k in range(order + 1)]
    for d in degrees:
        inv = [Fraction((-d) ** k) for k in range(order + 1)]
        poly = [sum(poly[i] * inv[k - i] for i in range(k + 1)) for k in range(order + 1)]
    return poly


def weighted_chern_numbers(weights, degrees):
    """Top Chern number (and c2^2 for fourfolds) of a weighted complete intersection."""
    m = len(weights) - 1 - len(degrees)
    c = series_coefficients(weights, degrees, m)
    volume = Fraction(prod(degrees), prod(weights))
    out = {"c%d" % m: c[m] * volume}
    if m == 4:
        out["c2^2"] = c[2] * c[2] * volume
    return out


def weighted_monomials(weights, degree):
    """Number of monomials of the given weighted degree, by brute force."""
    if degree < 0:
        return 0
    count = 0
    for exps in product(*[range(degree // w + 1) for w in weights]):
        if sum(e * w for e, w in zip(exps, weights)) == degree:
            count += 1
    return count


def projective_space_cohomology(n, d):
    """h^i(P^n, O(d)) from the classical closed form."""
    out = [0] * (n + 1)
    if d >= 0:
        out[0] = comb(n + d, n)
    if d <= -n - 1:
        out[n] = comb(-d - 1, n)
    return tuple(out)


def p1_cohomology(d):
    return (d + 1, 0) if d >= 0 else (0, -d - 1)


def p1xp1_cohomology(a, b):
    """Kunneth on P^1 x P^1 for O(a, b)."""
    x, y = p1_cohomology(a), p1_cohomology(b)
    return (x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1])


def box_points(halfspaces, bound):
    """Brute-force integer points of {<m, n> >= -c} inside [-bound, bound]^dim."""
    dim = len(halfspaces[0][0])
    return sorted(m for m in product(range(-bound, bound + 1), repeat=dim)
                  if all(sum(a * b for a, b in zip(m, n)) >= -c for n, c in halfspaces))


def p1_power_chern_number(k, degrees, ks):
    """Chern number of a CI in (P^1)^k cut by multidegrees, via h_i^2 = 0.

    Classes are dicts from frozensets of factor indices to rational
    coefficients; the point class h_1 ... h_k integrates to one.
    """
    def mul(a, b):
        out = {}
        for s, x in a.items():
            for t, y in b.items():
                if not s & t:
                    out[s | t] = out.get(s | t, 0) + x * y
        return out

    def linear(coeffs):
        return {frozenset([i]): Fraction(c) for i, c in enumerate(coeffs) if c}

    one = {frozenset(): Fraction(1)}
    total = one
    for i in range(k):
        total = mul(total, {frozenset(): Fraction(1), frozenset([i]): Fraction(2)})
    for d in degrees:
        N = linear(d)
        inverse, power = one, one
        for j in range(1, k + 1):
            power = mul(power, N)
            inverse = {s: inverse.get(s, 0) + (-1) ** j * power.get(s, 0)
                       for s in set(inverse) | set(power)}
        total = mul(total, inverse)
    graded = [{s: x for s, x in total.items() if len(s) == j} for j in range(k + 1)]
    out = one
    for d in degrees:
        out = mul(out, linear(d))
    for j in ks:
        out = mul(out, graded[j])
    return out.get(frozenset(range(k)), Fraction(0))
