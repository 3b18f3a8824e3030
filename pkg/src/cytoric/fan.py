"""Rational simplicial fans."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import lattice
from .errors import NotAFan, NotComplete, NotSimplicial, TorusFactor


@dataclass(frozen=True)
class Cone:
    """A cone of a fan, given by its sorted ray indices."""

    rays: tuple

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(sorted(self.rays)))

    @property
    def dim(self):
        return len(self.rays)

    def faces(self, dim=None):
        dims = range(len(self.rays) + 1) if dim is None else [dim]
        return [Cone(c) for d in dims for c in combinations(self.rays, d)]

    def __contains__(self, ray):
        return ray in self.rays


@dataclass(frozen=True)
class Wall:
    facet: tuple
    sigma: int
    sigma_prime: int
    extra_ray: int  # the ray of sigma_prime not in sigma


@dataclass(frozen=True)
class Fan:
    """A validated simplicial fan. Build it with :func:`validate_fan`."""

    rays: tuple
    max_cones: tuple
    name: str = ""
    warnings: tuple = field(default=(), compare=False)

    @property
    def dim(self):
        return len(self.rays[0])

    @property
    def n_rays(self):
        return len(self.rays)

    def ray_matrix(self, indices=None):
        idx = range(self.n_rays) if indices is None else indices
        return [list(self.rays[i]) for i in idx]

    @cached_property
    def cones(self):
        """Every cone of the fan (all faces of max cones), sorted by dimension."""
        seen = set()
        for mc in self.max_cones:
            for d in range(len(mc) + 1):
                seen.update(combinations(mc, d))
        return [Cone(c) for c in sorted(seen, key=lambda c: (len(c), c))]

    @cached_property
    def _cone_set(self):
        return frozenset(c.rays for c in self.cones)

    def is_cone(self, ray_indices):
        return tuple(sorted(ray_indices)) in self._cone_set

    def to_json(self):
        return {"name": self.name,
                "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    def __hash__(self):
        return hash((self.rays, self.max_cones))


def validate_fan(rays, max_cones, name=""):
    """Normalize and check raw ray/cone data.

    Rays are made primitive (with a warning record). Raises NotSimplicial,
    TorusFactor or NotAFan naming the offending cones.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    if not rays:
        raise TorusFactor("no rays")
    n = len(rays[0])
    if any(len(r) != n for r in rays):
        raise NotAFan("rays have differing lengths")
    warnings = []
    prim = []
    for i, r in enumerate(rays):
        p, g = lattice.primitive(r)
        if g == 0:
            raise NotAFan(f"ray {i} is zero")
        if g != 1:
            warnings.append(f"ray-primitivized:{i}")
        prim.append(p)
    if len(set(prim)) != len(prim):
        raise NotAFan("rays are not pairwise distinct")

    cones = []
    for c in max_cones:
        c = tuple(sorted(int(i) for i in c))
        if len(set(c)) != len(c) or any(not 0 <= i < len(prim) for i in c):
            raise NotAFan(f"bad ray indices in cone {c}", [c])
        cones.append(c)
    cones = sorted(set(cones))
    if not cones:
        raise NotAFan("no max cones")
    for a, b in combinations(cones, 2):
        if set(a) <= set(b) or set(b) <= set(a):
            raise NotAFan(f"cone {a} is a face of {b}", [a, b])
    used = set(i for c in cones for i in c)
    missing = [i for i in range(len(prim)) if i not in used]
    if missing:
        raise NotAFan(f"rays {missing} lie in no max cone")

    bad = [c for c in cones if lattice.rank([prim[i] for i in c]) != len(c)]
    if bad:
        raise NotSimplicial(f"cones {bad} have linearly dependent rays", bad)
    if lattice.rank(prim) != n:
        raise TorusFactor(f"rays span a space of dimension {lattice.rank(prim)} < {n}")

    for a, b in combinations(cones, 2):
        if not _meet_in_common_face(prim, a, b):
            raise NotAFan(f"cones {a} and {b} do not meet along a common face", [a, b])

    return Fan(tuple(prim), tuple(cones), name, tuple(warnings))


def _meet_in_common_face(rays, a, b):
    """True iff cone(a) and cone(b) intersect exactly in cone(a & b).

    A solution of sum_a l_i u_i = sum_b m_j u_j with l, m >= 0 and unit
    weight outside the common rays witnesses an improper intersection.
    """
    common = set(a) & set(b)
    union = sorted(set(a) | set(b))
    if lattice.rank([rays[i] for i in union]) == len(union):
        return True
    cols = [(i, 1) for i in a] + [(j, -1) for j in b]
    n = len(rays[0])
    A = [[s * rays[i][k] for i, s in cols] for k in range(n)]
    A.append([0 if i in common else 1 for i, _ in cols])
    return lattice.nonneg_solution(A, [0] * n + [1]) is None


def _facets(fan):
    facets = {}
    for ci, c in enumerate(fan.max_cones):
        for f in combinations(c, len(c) - 1):
            facets.setdefault(f, []).append(ci)
    return facets


def is_complete(fan):
    n = fan.dim
    if any(len(c) != n for c in fan.max_cones):
        return False
    facets = _facets(fan)
    if any(len(v) != 2 for v in facets.values()):
        return False
    adj = {i: set() for i in range(len(fan.max_cones))}
    for a, b in facets.values():
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(fan.max_cones)


def cone_multiplicity(fan, cone):
    """Index of the lattice spanned by the cone's rays in its saturation."""
    rays = cone.rays if isinstance(cone, Cone) else tuple(cone)
    if not rays:
        return 1
    factors = lattice.invariant_factors(fan.ray_matrix(rays))
    out = 1
    for d in factors:
        out *= d
    return out


def singular_cones(fan):
    """Minimal cones with multiplicity > 1; empty iff the fan is smooth."""
    found = []
    for c in fan.cones:
        if c.dim < 2:
            continue
        if any(set(s.rays) <= set(c.rays) for s in found):
            continue
        if cone_multiplicity(fan, c) > 1:
            found.append(c)
    return found


def walls(fan):
    if not is_complete(fan):
        raise NotComplete("walls need a complete fan")
    out = []
    for f, (a, b) in sorted(_facets(fan).items()):
        a, b = sorted((a, b))
        extra = next(i for i in fan.max_cones[b] if i not in f)
        out.append(Wall(f, a, b, extra))
    return out
