"""Cohomology of O(D)|_Z for a complete intersection Z = N_1 ... N_n.

The Koszul resolution gives a first page

    E_1^{-p,q} = sum_{|S|=p} H^q(F, O(D - N_S))  =>  H^{q-p}(Z, O(D)|_Z).

Higher differentials are never computed. A differential can only cancel
dimension between an entry of total degree k and an entry of total degree
k + 1 with fewer hypersurfaces, and the abutment vanishes outside [0, dim Z].
Bounds on each h^k are the extreme values of the cancellation flows allowed by
those constraints; when they coincide the answer is exact.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import ceil, floor

from . import lattice
from .cohomology import CohomologyVector, cohomology_dims
from .divisors import as_divisor
from .errors import CrossCheckFailed, IndeterminateChase
from .fan import Fan


@dataclass(frozen=True)
class CompleteIntersectionCY:
    fan: Fan
    hypersurfaces: tuple
    assume_smooth: bool = True
    name: str = ""
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        hs = tuple(as_divisor(self.fan, N) for N in self.hypersurfaces)
        object.__setattr__(self, "hypersurfaces", hs)
        if self.dim < 1:
            raise ValueError(
                f"{len(hs)} hypersurfaces in a {self.fan.dim}-dimensional ambient")

    @property
    def n(self):
        return len(self.hypersurfaces)

    @property
    def dim(self):
        return self.fan.dim - len(self.hypersurfaces)

    def to_json(self):
        out = {"fan": self.fan.to_json(),
               "hypersurfaces": [list(N) for N in self.hypersurfaces],
               "assume_smooth": self.assume_smooth}
        if self.name:
            out["name"] = self.name
        if self.provenance:
            out["provenance"] = self.provenance
        return out


@dataclass(frozen=True)
class KoszulPage:
    """E_1 entries keyed by (p, q) with p = |S|; values are summed dimensions."""

    entries: dict
    ambient_dim: int
    n: int

    def total_degree(self, k):
        return sum(v for (p, q), v in self.entries.items() if q - p == k)

    def euler_characteristic(self):
        return sum((-1) ** (q - p) * v for (p, q), v in self.entries.items())


def _subset_sum(hypersurfaces, S):
    n_rays = len(hypersurfaces[0])
    return tuple(sum(hypersurfaces[i][r] for i in S) for r in range(n_rays))


def koszul_page(Z, D):
    D = as_divisor(Z.fan, D)
    entries = {}
    for p in range(Z.n + 1):
        for q in range(Z.fan.dim + 1):
            entries[(p, q)] = 0
        for S in combinations(range(Z.n), p):
            NS = _subset_sum(Z.hypersurfaces, S)
            twist = tuple(a - b for a, b in zip(D, NS))
            h = cohomology_dims(Z.fan, twist)
            for q, v in enumerate(h.dims):
                entries[(p, q)] += v
    return KoszulPage(entries, Z.fan.dim, Z.n)


def chase(page, m):
    """Bound h^0..h^m of the abutment from the first page alone."""
    nz = [(p, q, v) for (p, q), v in sorted(page.entries.items()) if v]
    deg = lambda e: e[1] - e[0]
    pairs = [(i, j) for i, a in enumerate(nz) for j, b in enumerate(nz)
             if deg(b) == deg(a) + 1 and b[0] < a[0]]
    degrees = sorted({deg(e) for e in nz} | set(range(m + 1)))
    A = {k: sum(e[2] for e in nz if deg(e) == k) for k in degrees}

    if not pairs:
        stray = [k for k in degrees if A[k] and not 0 <= k <= m]
        if stray:
            raise CrossCheckFailed(f"Koszul page has uncancellable entries in degrees {stray}")
        dims = tuple(A[k] for k in range(m + 1))
        return CohomologyVector.exact_dims(dims)

    nv = len(pairs)

    def touching(k):
        return [x for x, (i, j) in enumerate(pairs) if deg(nz[i]) == k or deg(nz[j]) == k]

    G, h = [], []
    for x in range(nv):  # flows are non-negative
        G.append([-int(y == x) for y in range(nv)])
        h.append(0)
    for e in range(len(nz)):  # an entry can only be cancelled once
        G.append([int(e in pairs[x]) for x in range(nv)])
        h.append(nz[e][2])
    for k in degrees:
        row = [int(x in touching(k)) for x in range(nv)]
        if 0 <= k <= m:  # h^k = A_k - flow >= 0
            G.append(row)
            h.append(A[k])
        else:  # h^k = 0
            G.append(row)
            h.append(A[k])
            G.append([-v for v in row])
            h.append(-A[k])

    lower, upper = [], []
    for k in range(m + 1):
        row = [int(x in touching(k)) for x in range(nv)]
        most = lattice.linprog_max(row, G, h)
        least = lattice.linprog_max([-v for v in row], G, h)
        if most.status != "optimal" or least.status != "optimal":
            raise CrossCheckFailed("Koszul page admits no consistent cancellation pattern")
        # h^k = A_k - flow; flows are integral so round inward
        lower.append(A[k] - floor(most.value))
        upper.append(A[k] - ceil(-least.value))
    return CohomologyVector(tuple(lower), tuple(upper))


@lru_cache(maxsize=1024)
def _twisted(Z, D):
    page = koszul_page(Z, D)
    result = chase(page, Z.dim)
    # Euler characteristic is additive along the resolution
    chi = page.euler_characteristic()
    lo = sum(((-1) ** k) * (result.lower[k] if k % 2 == 0 else result.upper[k])
             for k in range(Z.dim + 1))
    hi = sum(((-1) ** k) * (result.upper[k] if k % 2 == 0 else result.lower[k])
             for k in range(Z.dim + 1))
    if not lo <= chi <= hi or (result.exact and result.euler_characteristic() != chi):
        raise CrossCheckFailed(f"Euler characteristic {chi} outside chase bounds")
    return result


def ci_twisted_cohomology(Z, D):
    """h^i(Z, O_F(D) restricted to Z) for i = 0..dim Z."""
    return _twisted(Z, as_divisor(Z.fan, D))


def structure_sheaf_profile(Z):
    return ci_twisted_cohomology(Z, (0,) * Z.fan.n_rays)


def normal_bundle_sections(Z):
    """h^0 of the normal bundle, the sum of h^0(O(N_i)|_Z)."""
    total = 0
    for i, N in enumerate(Z.hypersurfaces):
        h = ci_twisted_cohomology(Z, N)
        if h.lower[0] != h.upper[0]:
            raise IndeterminateChase(
                f"h^0(O(N_{i})|Z) only bounded: [{h.lower[0]}, {h.upper[0]}]")
        total += h.lower[0]
    return total
