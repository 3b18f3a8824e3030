"""Cohomology of rank-one reflexive sheaves O(D) on complete simplicial toric varieties.

For a weight m the graded piece H^i(F, O(D))_m is the reduced cohomology
H~^{i-1} of the subcomplex of the fan spanned by the rays with
<m, u_rho> < -a_rho. The sign pattern of m is therefore all that matters, so
the computation runs over ray subsets S: the homology of the induced
subcomplex is computed once per fan, and each subset with nonzero homology
contributes the number of lattice points in

    P_S = {m : <m,u> <= -a-1 on S,  <m,u> >= -a off S}.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import lattice
from .divisors import as_divisor, is_nef, polytope_of
from .errors import NotComplete, UnboundedPolytope
from .fan import is_complete
from .lattice import RationalPolytope


@dataclass(frozen=True)
class CohomologyVector:
    """Dimensions h^0..h^n, exact or as per-degree integer intervals."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("bound vectors differ in length")
        if any(lo < 0 or lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError(f"invalid bounds {self.lower} / {self.upper}")

    @classmethod
    def exact_dims(cls, dims):
        dims = tuple(dims)
        return cls(dims, dims)

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def dims(self):
        if not self.exact:
            raise ValueError("cohomology is only known up to intervals")
        return self.lower

    def __getitem__(self, i):
        return self.dims[i]

    def __len__(self):
        return len(self.lower)

    def euler_characteristic(self):
        return sum((-1) ** i * h for i, h in enumerate(self.dims))

    def to_json(self):
        if self.exact:
            return {"dims": list(self.dims), "exact": True}
        return {"lower": list(self.lower), "upper": list(self.upper), "exact": False}


@dataclass(frozen=True)
class SupportComplex:
    """Simplicial complex of fan cones whose rays all lie in ``vertices``."""

    vertices: frozenset
    faces: tuple  # every face, as sorted tuples, including the empty face

    @classmethod
    def induced(cls, fan, vertices):
        vs = frozenset(vertices)
        faces = tuple(c.rays for c in fan.cones if set(c.rays) <= vs)
        return cls(vs, faces)

    @property
    def dim(self):
        return max(len(f) for f in self.faces) - 1


def reduced_betti(complex_):
    """Ranks of reduced homology over Q.

    Entry k of the returned list is the rank in degree k - 1, so index 0 is
    degree -1 (rank 1 exactly when the complex has no vertices).
    """
    faces = complex_.faces if isinstance(complex_, SupportComplex) else tuple(
        tuple(sorted(f)) for f in complex_)
    if () not in faces:
        faces = ((),) + tuple(faces)
    top = max(len(f) for f in faces)
    by_size = [sorted(f for f in faces if len(f) == k) for k in range(top + 1)]
    # ranks of boundary maps C_k -> C_{k-1}, indexed by face size k
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        index = {f: i for i, f in enumerate(by_size[k - 1])}
        rows = []
        for f in by_size[k]:
            row = [0] * len(by_size[k - 1])
            for j in range(k):
                row[index[f[:j] + f[j + 1:]]] = (-1) ** j
            rows.append(row)
        ranks[k] = lattice.rank(rows) if rows else 0
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


@lru_cache(maxsize=None)
def _contributing_subsets(fan):
    """(subset, betti) for every ray subset whose induced complex has homology."""
    out = []
    for size in range(fan.n_rays + 1):
        for S in combinations(range(fan.n_rays), size):
            b = reduced_betti(SupportComplex.induced(fan, S))
            if any(b):
                out.append((S, tuple(b)))
    return tuple(out)


def sign_pattern_polytope(fan, D, S):
    S = set(S)
    hs = []
    for i, (u, a) in enumerate(zip(fan.rays, D)):
        if i in S:
            hs.append(([-x for x in u], -(a + 1)))
        else:
            hs.append((u, a))
    return RationalPolytope.from_halfspaces(fan.dim, hs)


def _chamber(fan, D):
    n = fan.dim
    dims = [0] * (n + 1)
    for S, betti in _contributing_subsets(fan):
        try:
            count = len(lattice.lattice_points(sign_pattern_polytope(fan, D, S)))
        except UnboundedPolytope:
            # an unbounded rational region holding one lattice point holds
            # infinitely many; finiteness of cohomology rules that out
            continue
        if not count:
            continue
        for k, b in enumerate(betti):  # k indexes degree k - 1, i.e. h^k
            if b and k <= n:
                dims[k] += b * count
    return tuple(dims)


@lru_cache(maxsize=4096)
def _cohomology_cached(fan, D, method):
    if method == "nef-fastpath":
        h0 = len(lattice.lattice_points(polytope_of(fan, D)))
        return (h0,) + (0,) * fan.dim
    return _chamber(fan, D)


def cohomology_dims(fan, D, method="auto"):
    """h^i(F, O(D)) for i = 0..dim F.

    ``method`` is "chamber", "nef-fastpath" (requires D nef) or "auto"
    (fast path whenever D is nef).
    """
    if not is_complete(fan):
        raise NotComplete("cohomology needs a complete fan")
    D = as_divisor(fan, D)
    if method not in ("auto", "chamber", "nef-fastpath"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "nef-fastpath" if is_nef(fan, D) else "chamber"
    elif method == "nef-fastpath" and not is_nef(fan, D):
        raise ValueError("nef-fastpath requested for a divisor that is not nef")
    return CohomologyVector.exact_dims(_cohomology_cached(fan, D, method))


def resolved_method(fan, D, method="auto"):
    if method == "auto":
        return "nef-fastpath" if is_nef(fan, as_divisor(fan, D)) else "chamber"
    return method
