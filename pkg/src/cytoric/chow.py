"""Rational Chow ring of a complete simplicial toric variety.

Polynomials in the ray variables x_rho are kept as ``{exponent tuple:
Fraction}``. Products are brought to a normal form spanned by square-free
monomials of cones: a monomial whose support is not a cone is zero, and a
repeated variable x_rho inside a max cone sigma is replaced using the linear
relation of the character m with <m, u_rho> = 1 and <m, u> = 0 on the other
rays of sigma. Each substitution enlarges the support, so this terminates.
The degree of a top-dimensional square-free cone monomial is 1/multiplicity.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lattice
from .divisors import as_divisor, divisor_class
from .errors import (AdjunctionFailed, DimensionMismatch, NonIntegerEuler,
                     WrongDegree)
from .fan import cone_multiplicity, is_complete
from .errors import NotComplete


class ChowRing:
    def __init__(self, fan):
        if not is_complete(fan):
            raise NotComplete("intersection numbers need a complete fan")
        self.fan = fan
        self.n = fan.dim
        self.r = fan.n_rays
        self._reduce_cache = {}
        self._subst = {}

    def _max_cone_containing(self, support):
        for ci, cone in enumerate(self.fan.max_cones):
            if support <= set(cone):
                return ci
        return None

    def _substitution(self, ci, rho):
        """x_rho = sum_{rho' not in sigma} coeff * x_rho' in the Chow ring."""
        key = (ci, rho)
        if key not in self._subst:
            cone = self.fan.max_cones[ci]
            rays = self.fan.ray_matrix(cone)
            sol = lattice.solve_rational(rays, [int(i == rho) for i in cone])
            m = sol.x
            self._subst[key] = tuple(
                (j, -sum(a * b for a, b in zip(m, self.fan.rays[j])))
                for j in range(self.r)
                if j not in cone and any(a * b for a, b in zip(m, self.fan.rays[j])))
        return self._subst[key]

    def reduce_monomial(self, exps):
        """Normal form of one monomial as {square-free exponent tuple: Fraction}."""
        exps = tuple(exps)
        if exps in self._reduce_cache:
            return self._reduce_cache[exps]
        support = {i for i, e in enumerate(exps) if e}
        if not self.fan.is_cone(support):
            out = {}
        elif all(e <= 1 for e in exps):
            out = {exps: Fraction(1)}
        else:
            ci = self._max_cone_containing(support)
            rho = min(i for i, e in enumerate(exps) if e > 1)
            out = {}
            for j, coeff in self._substitution(ci, rho):
                new = list(exps)
                new[rho] -= 1
                new[j] += 1
                for mono, c in self.reduce_monomial(new).items():
                    out[mono] = out.get(mono, 0) + coeff * c
            out = {k: v for k, v in out.items() if v}
        self._reduce_cache[exps] = out
        return out

    def reduce(self, poly):
        out = {}
        for mono, c in poly.items():
            for k, v in self.reduce_monomial(mono).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def monomial_degree(self, exps):
        """Degree of a top-degree monomial."""
        if sum(exps) != self.n:
            raise WrongDegree(f"monomial of degree {sum(exps)} in dimension {self.n}")
        return sum((c * self._squarefree_degree(m)
                    for m, c in self.reduce_monomial(tuple(exps)).items()), Fraction(0))

    @lru_cache(maxsize=None)
    def _squarefree_degree(self, exps):
        support = tuple(i for i, e in enumerate(exps) if e)
        return Fraction(1, cone_multiplicity(self.fan, support))

    # -- classes -------------------------------------------------------------

    def one(self):
        return GradedClass(self, 0, {(0,) * self.r: Fraction(1)})

    def divisor(self, D):
        D = as_divisor(self.fan, D)
        terms = {}
        for i, a in enumerate(D):
            if a:
                e = [0] * self.r
                e[i] = 1
                terms[tuple(e)] = Fraction(a)
        return GradedClass(self, 1, terms)

    def ray(self, i):
        return self.divisor(tuple(int(j == i) for j in range(self.r)))


def _mul_polys(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return out


@dataclass(frozen=True)
class GradedClass:
    """A homogeneous class, stored in the square-free cone normal form."""

    ring: ChowRing
    degree: int
    terms: dict

    def __post_init__(self):
        if self.degree > self.ring.n:
            object.__setattr__(self, "terms", {})
        else:
            object.__setattr__(self, "terms", self.ring.reduce(self.terms))

    def __add__(self, other):
        if other.degree != self.degree:
            raise WrongDegree("adding classes of different degree")
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return GradedClass(self.ring, self.degree, t)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedClass(self.ring, self.degree,
                           {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            return self.scale(other)
        return GradedClass(self.ring, self.degree + other.degree,
                           _mul_polys(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def integrate(self):
        """Degree of a top-degree class."""
        if self.degree != self.ring.n:
            raise WrongDegree(f"integrating a degree-{self.degree} class")
        return sum((c * self.ring._squarefree_degree(m) for m, c in self.terms.items()),
                   Fraction(0))

    def coordinates(self):
        """Pairings against every square-free cone monomial of complementary degree.

        Two classes are equal in the rational Chow ring iff these agree
        (Poincare duality over Q for complete simplicial fans).
        """
        k = self.ring.n - self.degree
        out = []
        for cone in self.ring.fan.cones:
            if cone.dim == k:
                e = [0] * self.ring.r
                for i in cone.rays:
                    e[i] = 1
                dual = GradedClass(self.ring, k, {tuple(e): Fraction(1)})
                out.append((self * dual).integrate())
        return tuple(out)

    def is_zero(self):
        return not self.terms or all(v == 0 for v in self.coordinates())


@lru_cache(maxsize=None)
def chow_ring(fan):
    return ChowRing(fan)


def intersection_number(fan, divisors):
    """Degree of the product of exactly dim F divisors."""
    divisors = list(divisors)
    if len(divisors) != fan.dim:
        raise WrongDegree(f"{len(divisors)} factors in dimension {fan.dim}")
    R = chow_ring(fan)
    out = R.one()
    for D in divisors:
        out = out * R.divisor(D)
    return out.integrate()


def monomial_intersection(fan, exponents):
    """Degree of prod x_rho^e_rho given the exponent list."""
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) != fan.n_rays:
        raise DimensionMismatch(
            f"{len(exponents)} exponents for {fan.n_rays} rays")
    return chow_ring(fan).monomial_degree(exponents)


# -- Chern classes -----------------------------------------------------------


def _elementary(R, k):
    """k-th elementary symmetric polynomial in the ray classes: c_k(T_F)."""
    c = [R.one()] + [GradedClass(R, d, {}) for d in range(1, k + 1)]
    for i in range(R.r):
        x = R.ray(i)
        for d in range(k, 0, -1):
            c[d] = c[d] + c[d - 1] * x
    return c[k]


@dataclass(frozen=True)
class ChernData:
    ambient: tuple  # c_k(T_F), k = 0..dim Z
    normal: tuple   # c_k of the normal bundle
    z: tuple        # c_k(Z) as ambient classes, k = 0..dim Z
    fundamental: GradedClass  # [Z] = N_1 ... N_n

    def number(self, *ks):
        """Integral over Z of c_{k1} ... c_{kj}; the ks must add up to dim Z."""
        out = self.fundamental
        for k in ks:
            out = out * self.z[k]
        return out.integrate()


def check_adjunction(Z):
    total = tuple(sum(N[r] for N in Z.hypersurfaces) for r in range(Z.fan.n_rays))
    anti = (1,) * Z.fan.n_rays
    lhs, rhs = divisor_class(Z.fan, total), divisor_class(Z.fan, anti)
    if lhs != rhs:
        raise AdjunctionFailed(
            f"sum of hypersurface classes {tuple(lhs)} differs from -K class {tuple(rhs)}")


def chern_data(Z):
    check_adjunction(Z)
    R = chow_ring(Z.fan)
    m = Z.dim
    ambient = tuple(_elementary(R, k) for k in range(m + 1))
    Ns = [R.divisor(N) for N in Z.hypersurfaces]
    normal = [R.one()] + [GradedClass(R, d, {}) for d in range(1, m + 1)]
    for N in Ns:
        for d in range(m, 0, -1):
            normal[d] = normal[d] + normal[d - 1] * N
    # inverse of the total normal Chern class, degree by degree
    inv = [R.one()]
    for k in range(1, m + 1):
        acc = GradedClass(R, k, {})
        for j in range(1, k + 1):
            acc = acc - normal[j] * inv[k - j]
        inv.append(acc)
    z = []
    for k in range(m + 1):
        acc = GradedClass(R, k, {})
        for j in range(k + 1):
            acc = acc + ambient[j] * inv[k - j]
        z.append(acc)
    fundamental = R.one()
    for N in Ns:
        fundamental = fundamental * N
    return ChernData(ambient, tuple(normal), tuple(z), fundamental)


def chern_numbers_ci(Z):
    """Top Chern number, plus c_2^2 for fourfolds, as exact rationals."""
    cd = chern_data(Z)
    m = Z.dim
    out = {f"c{m}": cd.number(m)}
    if m == 4:
        out["c2^2"] = cd.number(2, 2)
    return out


def euler_characteristic_ci(Z):
    e = chern_numbers_ci(Z)[f"c{Z.dim}"]
    if e.denominator != 1:
        raise NonIntegerEuler(f"top Chern number {e} is not an integer")
    return int(e)
