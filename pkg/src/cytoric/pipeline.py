"""Calabi-Yau validation, smoothness certificates and Hodge diamonds.

The certificate shows H^1(Z, T_F|Z) = 0 by establishing, ray by ray, the
vanishing H^1(Z, O_F(D_rho)|Z) = 0; together with H^2(Z, O_Z) = 0 this makes
the forgetful map from embedded to abstract deformations smooth. Each ray is
certified by the first path that succeeds:

* ``nef-and-big``: D_rho nef on F and D_rho^m . Z > 0 (Kawamata-Viehweg);
* ``complete-intersection-nef``: D_rho nef and every N_i ample;
* ``direct-koszul``: the Koszul chase gives h^1 = 0 exactly.
"""

from dataclasses import dataclass, field
from .chow import chern_numbers_ci, check_adjunction, intersection_number
from .divisors import class_group, is_ample, is_fano, is_nef, ray_divisor
from .errors import (AdjunctionFailed, CrossCheckFailed, NonIntegerEuler,
                     NonIntegerSignatureTerm, NotCertified, IndeterminateChase,
                     ValidationRejected)
from .fan import is_complete, singular_cones
from .koszul import ci_twisted_cohomology, normal_bundle_sections, structure_sheaf_profile

PATHS = ("nef-and-big", "complete-intersection-nef", "direct-koszul")

# assumption codes; every warning the CLI prints is one of these
VERY_AMPLE = "very-ampleness-assumed"
GENERIC_SMOOTH = "generic-smoothness-assumed"
Q_RING = "q-ring-provenance"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def raise_for_failure(self):
        bad = self.failures
        if bad:
            if bad[0].name == "adjunction":
                raise AdjunctionFailed(bad[0].detail)
            raise ValidationRejected(bad[0].name, bad[0].detail)

    def to_json(self):
        return [{"check": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks]


def assumptions_for(Z):
    out = [VERY_AMPLE]
    if Z.assume_smooth:
        out.append(GENERIC_SMOOTH)
    if singular_cones(Z.fan):
        out.append(Q_RING)
    return out


def validate_cy(Z):
    """Run every check in order; failures are recorded, not raised."""
    rep = ValidationReport(assumptions=assumptions_for(Z))
    fan = Z.fan
    complete = is_complete(fan)
    rep.checks.append(Check("fan", complete,
                            "valid simplicial fan" + ("" if complete else ", not complete")))
    if not complete:
        return rep
    fano = is_fano(fan)
    rep.checks.append(Check("fano", fano, "" if fano else "-K_F is not ample"))
    not_ample = [i for i, N in enumerate(Z.hypersurfaces) if not is_ample(fan, N)]
    rep.checks.append(Check(
        "ample_hypersurfaces", not not_ample,
        f"N_{not_ample} not ample" if not_ample else "ample; very-ampleness assumed"))
    try:
        check_adjunction(Z)
        rep.checks.append(Check("adjunction", True, "sum N_i ~ -K_F"))
    except AdjunctionFailed as exc:
        rep.checks.append(Check("adjunction", False, str(exc)))
        return rep
    prof = structure_sheaf_profile(Z)
    expected = (1,) + (0,) * (Z.dim - 1) + (1,)
    rep.checks.append(Check(
        "cy_profile", prof.exact and prof.dims == expected,
        f"h^i(O_Z) = {prof.dims if prof.exact else (prof.lower, prof.upper)}"))
    h2 = prof.upper[2] if Z.dim >= 2 else 0
    rep.checks.append(Check("h2_structure_sheaf", h2 == 0, f"h^2(O_Z) <= {h2}"))
    rep.checks.append(Check("dimension", Z.dim >= 3, f"dim Z = {Z.dim}"))
    return rep


@dataclass
class RayRecord:
    ray: int
    path: str  # None when no path succeeded
    evidence: dict
    all_paths: list = field(default_factory=list)

    def to_json(self):
        out = {"ray": self.ray, "path": self.path, "evidence": self.evidence}
        if self.all_paths:
            out["all_paths"] = self.all_paths
        return out


@dataclass
class SmoothnessCertificate:
    verdict: str  # "smooth", "not-certified" or "rejected"
    per_ray: list
    dimension: int
    validation: ValidationReport
    assumptions: list

    def __post_init__(self):
        if self.verdict == "smooth":
            assert self.dimension >= 3 and self.validation.ok
            assert all(r.path for r in self.per_ray)

    @property
    def failing_rays(self):
        return [r.ray for r in self.per_ray if r.path is None]

    def to_json(self):
        return {"verdict": self.verdict,
                "per_ray": [r.to_json() for r in self.per_ray],
                "dimension": self.dimension,
                "validation": self.validation.to_json(),
                "assumptions": list(self.assumptions)}


def _try_path(Z, rho, path):
    fan = Z.fan
    D = ray_divisor(fan, rho)
    if path in ("nef-and-big", "complete-intersection-nef"):
        nef = is_nef(fan, D)
        if path == "nef-and-big":
            deg = intersection_number(fan, [D] * Z.dim + list(Z.hypersurfaces))
            return nef and deg > 0, {"nef": nef, "degree_on_Z": str(deg)}
        ample = all(is_ample(fan, N) for N in Z.hypersurfaces)
        return nef and ample, {"nef": nef, "hypersurfaces_ample": ample}
    h = ci_twisted_cohomology(Z, D)
    ok = len(h) > 1 and h.upper[1] == 0
    return ok, {"h1_upper_bound": h.upper[1] if len(h) > 1 else 0}


def smoothness_certificate(Z, all_paths=False, force_path=None):
    """Certify smoothness of the forgetful morphism for every ray.

    ``force_path`` restricts the search to one path; ``all_paths`` records
    every path that succeeds for each ray, not just the first.
    """
    rep = validate_cy(Z)
    assumptions = rep.assumptions
    if not rep.ok:
        return SmoothnessCertificate("rejected", [], Z.dim, rep, assumptions)
    if force_path is not None and force_path not in PATHS:
        raise ValueError(f"unknown path {force_path!r}")
    paths = PATHS if force_path is None else (force_path,)
    records = []
    for rho in range(Z.fan.n_rays):
        chosen, evidence, successes = None, {}, []
        for path in paths:
            ok, ev = _try_path(Z, rho, path)
            if ok:
                successes.append(path)
                if chosen is None:
                    chosen, evidence = path, ev
                if not all_paths:
                    break
            elif chosen is None:
                evidence[path] = ev
        records.append(RayRecord(rho, chosen, evidence, successes if all_paths else []))
    verdict = "smooth" if all(r.path for r in records) else "not-certified"
    return SmoothnessCertificate(verdict, records, Z.dim, rep, assumptions)


@dataclass(frozen=True)
class H11:
    value: int
    certified: bool


def h11(Z):
    """h^{1,1} = rank CL(F); certified when every D_rho is nef and every N_i ample."""
    t = class_group(Z.fan).rank
    fan = Z.fan
    ok = (all(is_nef(fan, ray_divisor(fan, i)) for i in range(fan.n_rays))
          and all(is_ample(fan, N) for N in Z.hypersurfaces))
    return H11(t, ok)


def h_middle(Z, certificate=None):
    """h^{m-1,1} = h^0(N_{Z/F}) - sum_rho h^0(O(D_rho)|Z) + t.

    Only defined under a smooth certificate.
    """
    certificate = certificate or smoothness_certificate(Z)
    if certificate.verdict != "smooth":
        raise NotCertified(f"smoothness verdict is {certificate.verdict!r}")
    normal = normal_bundle_sections(Z)
    euler_sections = 0
    for rho in range(Z.fan.n_rays):
        h = ci_twisted_cohomology(Z, ray_divisor(Z.fan, rho))
        if h.lower[0] != h.upper[0]:
            raise IndeterminateChase(f"h^0(O(D_{rho})|Z) is not determined")
        euler_sections += h.lower[0]
    return normal - euler_sections + class_group(Z.fan).rank


@dataclass(frozen=True)
class HodgeDiamond:
    m: int
    h: tuple  # h[p][q]
    cross_checks: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        m, h = self.m, self.h
        for p in range(m + 1):
            for q in range(m + 1):
                assert h[p][q] == h[q][p], "Hodge symmetry"
                assert h[p][q] == h[m - p][m - q], "Serre duality"
        assert h[0][0] == 1 and h[m][0] == 1
        assert all(h[p][0] == 0 for p in range(1, m))

    def __getitem__(self, pq):
        p, q = pq
        return self.h[p][q]

    def euler(self):
        return sum((-1) ** (p + q) * self.h[p][q]
                   for p in range(self.m + 1) for q in range(self.m + 1))

    def rows(self):
        """Rows of the diamond from top, each listed left to right."""
        m = self.m
        return [[self.h[p][k - p] for p in range(max(0, k - m), min(k, m) + 1)][::-1]
                for k in range(2 * m, -1, -1)]

    def pretty(self):
        rows = self.rows()
        width = max(len(str(v)) for r in rows for v in r) + 2
        lines = []
        for r in rows:
            pad = (self.m + 1 - len(r)) * width // 2
            lines.append(" " * pad + "".join(str(v).center(width) for v in r))
        return "\n".join(line.rstrip() for line in lines)

    def to_json(self):
        return {"m": self.m, "table": [list(r) for r in self.h]}


def _symmetric_table(m, values):
    h = [[0] * (m + 1) for _ in range(m + 1)]
    for (p, q), v in values.items():
        for a, b in {(p, q), (q, p), (m - p, m - q), (m - q, m - p)}:
            h[a][b] = v
    return tuple(tuple(r) for r in h)


def hodge_diamond(Z, certificate=None):
    """Assemble the Hodge diamond of a CY threefold or fourfold, with oracle checks."""
    m = Z.dim
    if m not in (3, 4):
        raise NotCertified(f"Hodge assembly covers dimensions 3 and 4, not {m}")
    certificate = certificate or smoothness_certificate(Z)
    if certificate.verdict != "smooth":
        raise NotCertified(f"smoothness verdict is {certificate.verdict!r}")
    t = h11(Z)
    if not t.certified:
        raise NotCertified("h^{1,1} = t needs every D_rho nef and every N_i ample")
    mid = h_middle(Z, certificate)
    chern = chern_numbers_ci(Z)
    top = chern[f"c{m}"]
    if top.denominator != 1:
        raise NonIntegerEuler(f"top Chern number {top} is not an integer")
    top = int(top)
    checks = {"chern_numbers": {k: str(v) for k, v in chern.items()}}
    values = {(0, 0): 1, (m, 0): 1, (1, 1): t.value}
    if m == 3:
        values[(2, 1)] = mid
        lhs = 2 * (t.value - mid)
        checks["euler"] = {"from_hodge": lhs, "from_chern": top, "passed": lhs == top}
        if lhs != top:
            raise CrossCheckFailed(f"2(h11 - h21) = {lhs} but c3.Z = {top}")
    else:
        c2sq = chern["c2^2"]
        numerator = 3 * c2sq + 14 * top
        if numerator.denominator != 1 or numerator.numerator % 45:
            raise NonIntegerSignatureTerm(f"3 c2^2 + 14 c4 = {numerator} is not divisible by 45")
        signature = int(numerator) // 45
        # signature = sum_{p,q} (-1)^q h^{p,q} = 4 - 2t - 2c + d; for t = 1
        # this is the familiar d = 2c - 2 + (3 c2^2 + 14 c4) / 45
        d = signature - 4 + 2 * t.value + 2 * mid
        values[(3, 1)] = mid
        values[(2, 2)] = d
        values[(2, 1)] = 0
        lhs = 4 + 2 * t.value + 2 * mid + d
        checks["signature_term"] = {"value": int(numerator), "divisible_by_45": True,
                                    "signature": signature}
        checks["euler"] = {"from_hodge": lhs, "from_chern": top, "passed": lhs == top}
        if lhs != top:
            raise CrossCheckFailed(f"4 + 2t + 2c + d = {lhs} but c4.Z = {top}")
    diamond = HodgeDiamond(m, _symmetric_table(m, values), checks)
    if diamond.euler() != top:
        raise CrossCheckFailed(f"diamond Euler number {diamond.euler()} != {top}")
    return diamond


def clear_caches():
    """Drop every memoized intermediate (class groups, cohomology, Chow rings)."""
    from . import chow, cohomology, divisors, koszul
    for fn in (divisors.class_group, divisors._cone_inverse,
               cohomology._contributing_subsets, cohomology._cohomology_cached,
               koszul._twisted, chow.chow_ring, chow.ChowRing._squarefree_degree):
        fn.cache_clear()
