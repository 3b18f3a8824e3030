"""Built-in ambient fans and Calabi-Yau complete intersections."""

import re
from itertools import combinations, product
from math import gcd

from .errors import NonPrimitiveConfiguration, UnknownEntry, UnsupportedWeights
from .fan import validate_fan
from .koszul import CompleteIntersectionCY


def weighted_projective(weights, name=None):
    """Fan of P(w_0, ..., w_n) on the lattice Z^n.

    The first unit weight w_i gets the ray -sum_{j != i} w_j e_j and the other
    weights get the standard basis vectors in order, so ray j always carries
    weight w_j. Configurations need at least three unit weights (or all
    weights equal to one).
    """
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2 or any(w <= 0 for w in weights):
        raise UnsupportedWeights(f"weights must be >= 2 positive integers: {weights}")
    g = 0
    for w in weights:
        g = gcd(g, w)
    if g != 1:
        raise UnsupportedWeights(f"weights {weights} have common factor {g}")
    units = weights.count(1)
    if units < 3 and units != len(weights):
        raise UnsupportedWeights(
            f"weights {weights} have fewer than three unit weights")
    lead = weights.index(1)
    n = len(weights) - 1
    others = [j for j in range(n + 1) if j != lead]
    rays = []
    for j in range(n + 1):
        if j == lead:
            rays.append(tuple(-weights[k] for k in others))
        else:
            rays.append(tuple(int(k == others.index(j)) for k in range(n)))
    lead_gcd = 0
    for v in rays[lead]:
        lead_gcd = gcd(lead_gcd, v)
    if lead_gcd != 1:
        raise NonPrimitiveConfiguration(f"ray {rays[lead]} is not primitive")
    cones = list(combinations(range(n + 1), n))
    if name is None:
        name = ("P%d" % n if units == len(weights)
                else "P(" + ",".join(map(str, weights)) + ")")
    return validate_fan(rays, cones, name)


def projective_space(n):
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    return weighted_projective((1,) * (n + 1), name=f"P{n}")


def product_of_projective_lines(k):
    """(P^1)^k with rays e_1, -e_1, e_2, -e_2, ..."""
    rays = []
    for i in range(k):
        for s in (1, -1):
            rays.append(tuple(s * int(j == i) for j in range(k)))
    cones = [tuple(2 * i + c for i, c in enumerate(choice))
             for choice in product((0, 1), repeat=k)]
    return validate_fan(rays, cones, f"P1^{k}")


def hypersurface_degrees(fan, degrees, unit_ray=0):
    """Divisors d * D_rho for a unit-weight ray rho, one per degree."""
    return [tuple(d if j == unit_ray else 0 for j in range(fan.n_rays)) for d in degrees]


_LITERATURE_NOTE = ("nonsingular weighted Calabi-Yau threefold from the weighted complete "
               "intersection literature; generic smoothness asserted, not computed")
_ADDED_NOTE = "added for testing; not among the weighted examples, smoothness asserted"

_ENTRIES = {
    "X5": ((1, 1, 1, 1, 1), (5,), _LITERATURE_NOTE),
    "X6": ((1, 1, 1, 1, 2), (6,), _LITERATURE_NOTE),
    "X8": ((1, 1, 1, 1, 4), (8,), _LITERATURE_NOTE),
    "X10": ((1, 1, 1, 2, 5), (10,), _LITERATURE_NOTE),
    "X24": ((1, 1, 1, 1, 1, 1), (2, 4), _LITERATURE_NOTE),
    "X33": ((1, 1, 1, 1, 1, 1), (3, 3), _LITERATURE_NOTE),
    "X34": ((1, 1, 1, 1, 1, 2), (3, 4), _LITERATURE_NOTE),
    "X44": ((1, 1, 1, 1, 2, 2), (4, 4), _LITERATURE_NOTE),
    "sextic4fold": ((1, 1, 1, 1, 1, 1), (6,), _ADDED_NOTE),
}


def names():
    return sorted(list(_ENTRIES) + ["ci2222"])


def catalog_entry(name):
    if name == "ci2222":
        fan = product_of_projective_lines(4)
        N = tuple(2 if j % 2 == 0 else 0 for j in range(fan.n_rays))
        return CompleteIntersectionCY(fan, (N,), True, name,
                                      "(2,2,2,2) hypersurface in (P^1)^4; " + _ADDED_NOTE)
    try:
        weights, degrees, note = _ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {names()}") from None
    fan = weighted_projective(weights)
    return CompleteIntersectionCY(fan, tuple(hypersurface_degrees(fan, degrees)),
                                  True, name, note)


_WEIGHTED = re.compile(r"^P\(([\d,\s]+)\)$")


def ambient_fan(name):
    """Resolve an ambient name: P<n>, P(w0,...,wn), P1^<k>, or a CY entry name."""
    m = re.fullmatch(r"P(\d+)", name)
    if m:
        return projective_space(int(m.group(1)))
    m = re.fullmatch(r"P1\^(\d+)", name)
    if m:
        return product_of_projective_lines(int(m.group(1)))
    m = _WEIGHTED.match(name)
    if m:
        return weighted_projective([int(x) for x in m.group(1).split(",")])
    return catalog_entry(name).fan
