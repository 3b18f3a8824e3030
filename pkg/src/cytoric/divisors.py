"""Torus-invariant divisors: class group, Cartier data, nef/ample tests."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import lattice
from .errors import DimensionMismatch
from .fan import walls
from .lattice import RationalPolytope


def as_divisor(fan, coeffs):
    coeffs = tuple(int(a) for a in coeffs)
    if len(coeffs) != fan.n_rays:
        raise DimensionMismatch(
            f"divisor has {len(coeffs)} coefficients but the fan has {fan.n_rays} rays")
    return coeffs


def ray_divisor(fan, i, mult=1):
    return tuple(mult if j == i else 0 for j in range(fan.n_rays))


def anticanonical(fan):
    return (1,) * fan.n_rays


def principal_divisor(fan, m):
    """div(chi^m) = sum <m, u_rho> D_rho."""
    return tuple(sum(a * b for a, b in zip(m, u)) for u in fan.rays)


class ClassCoordinates(NamedTuple):
    free: tuple
    torsion: tuple


@dataclass(frozen=True)
class DivisorClassGroup:
    """CL(F) = Z^rank + sum Z/d_i, with the projection from divisors."""

    rank: int
    torsion: tuple
    # rows of U picking out free and torsion coordinates
    free_rows: tuple
    torsion_rows: tuple

    def project(self, coeffs):
        free = tuple(sum(u * a for u, a in zip(row, coeffs)) for row in self.free_rows)
        tors = tuple(sum(u * a for u, a in zip(row, coeffs)) % d
                     for row, d in zip(self.torsion_rows, self.torsion))
        return ClassCoordinates(free, tors)


@lru_cache(maxsize=None)
def class_group(fan):
    D, U, _ = lattice.smith_normal_form(fan.ray_matrix())
    r, n = D.rows, D.cols
    diag = [D[i, i] for i in range(min(r, n))]
    rk = sum(1 for d in diag if d)
    torsion_idx = [i for i in range(rk) if diag[i] > 1]
    free_rows = [list(U.row(i)) for i in range(rk, r)]
    if len(free_rows) == 1:
        # orient the degree so that -K has positive degree
        if sum(free_rows[0]) < 0:
            free_rows[0] = [-x for x in free_rows[0]]
    return DivisorClassGroup(
        rank=r - rk,
        torsion=tuple(diag[i] for i in torsion_idx),
        free_rows=tuple(tuple(x) for x in free_rows),
        torsion_rows=tuple(tuple(U.row(i)) for i in torsion_idx),
    )


def divisor_class(fan, D, group=None):
    group = group or class_group(fan)
    return group.project(as_divisor(fan, D))


def linearly_equivalent(fan, D1, D2):
    return divisor_class(fan, D1) == divisor_class(fan, D2)


@lru_cache(maxsize=None)
def _cone_inverse(fan, ci):
    """Rows of the inverse of the ray matrix of max cone ``ci`` (square)."""
    rays = fan.ray_matrix(fan.max_cones[ci])
    n = len(rays)
    cols = []
    for k in range(n):
        sol = lattice.solve_rational(rays, [int(i == k) for i in range(n)])
        cols.append(sol.x)
    return tuple(cols)  # cols[k] = m with <m, u_j> = delta_jk over the cone's rays


def cartier_data(fan, D):
    """Per max cone, the rational m_sigma with <m_sigma, u_rho> = -a_rho on sigma."""
    D = as_divisor(fan, D)
    out = []
    for ci, cone in enumerate(fan.max_cones):
        if len(cone) == fan.dim:
            dual = _cone_inverse(fan, ci)
            m = [Fraction(0)] * fan.dim
            for k, rho in enumerate(cone):
                for j in range(fan.dim):
                    m[j] -= D[rho] * dual[k][j]
            out.append(tuple(m))
        else:
            sol = lattice.solve_rational(fan.ray_matrix(cone), [-D[r] for r in cone])
            out.append(sol.x)
    return tuple(out)


def _wall_slacks(fan, D):
    D = as_divisor(fan, D)
    ms = cartier_data(fan, D)
    for w in walls(fan):
        u = fan.rays[w.extra_ray]
        yield sum(a * b for a, b in zip(ms[w.sigma], u)) + D[w.extra_ray]


def is_nef(fan, D):
    return all(s >= 0 for s in _wall_slacks(fan, D))


def is_ample(fan, D):
    return all(s > 0 for s in _wall_slacks(fan, D))


def is_fano(fan):
    return is_ample(fan, anticanonical(fan))


def polytope_of(fan, D):
    D = as_divisor(fan, D)
    return RationalPolytope.from_halfspaces(fan.dim, zip(fan.rays, D))
