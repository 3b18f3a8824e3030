"""Command-line interface.

Usage::

    cytoric [--format json|table] fan check <fan-file>
    cytoric coh <fan-file> -D <coeffs> [--method chamber|nef-fastpath|auto]
    cytoric intersect <fan-file> -m <ray-exponents>
    cytoric smooth <cy-file> [--all-paths] [--force-path PATH]
    cytoric hodge <cy-file> [--oracle] [--all-paths]
    cytoric catalog list
    cytoric catalog emit <name> [-o FILE]

Any file argument may be ``catalog:<name>``. Exit codes: 0 success, 1
validation rejection, 2 usage error, 3 internal cross-check failure.
"""

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .chow import chern_numbers_ci, monomial_intersection
from .cohomology import cohomology_dims, resolved_method
from .divisors import class_group, is_fano
from .errors import CrossCheckError, CytoricError
from .fan import is_complete, singular_cones, validate_fan, walls
from .koszul import CompleteIntersectionCY
from .pipeline import (PATHS, h11, hodge_diamond, smoothness_certificate)

_SAFE_INT = 2 ** 53


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list
    inputs_digest: str = ""
    payload: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    exit_code: int = 0
    table: str = ""
    format: str = "json"

    def to_json(self):
        return {"command": self.command, "inputs_digest": self.inputs_digest,
                "result": self.payload, "warnings": self.warnings,
                "exit_code": self.exit_code}


def jsonable(obj):
    """Exact-safe JSON values: big ints and rationals become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < _SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc):
    return json.dumps(jsonable(doc), sort_keys=True, separators=(",", ":"))


def _digest(doc):
    return hashlib.sha256(dumps(doc).encode()).hexdigest()


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _fan_from_json(doc):
    try:
        return validate_fan(doc["rays"], doc["max_cones"], doc.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"fan document lacks a valid field: {exc}") from None


def load_fan(source):
    if source.startswith("catalog:"):
        return catalog.ambient_fan(source[len("catalog:"):])
    doc = _read_json(source)
    if "rays" in doc:
        return _fan_from_json(doc)
    return load_cy(source).fan


def _cy_from_json(doc):
    if "fan" in doc:
        fan = _fan_from_json(doc["fan"])
    elif "fan_ref" in doc:
        ref = doc["fan_ref"]
        if not ref.startswith("catalog:"):
            raise UsageError(f"fan_ref must start with 'catalog:', got {ref!r}")
        fan = catalog.ambient_fan(ref[len("catalog:"):])
    else:
        raise UsageError("CY document needs 'fan' or 'fan_ref'")
    try:
        hs = [tuple(int(a) for a in N) for N in doc["hypersurfaces"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad 'hypersurfaces': {exc}") from None
    return CompleteIntersectionCY(fan, tuple(hs), bool(doc.get("assume_smooth", True)),
                                  doc.get("name", ""), doc.get("provenance", ""))


def load_cy(source):
    if source.startswith("catalog:"):
        return catalog.catalog_entry(source[len("catalog:"):])
    return _cy_from_json(_read_json(source))


def parse_int_list(text):
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [v for v in text.split(",") if v.strip()]
        return tuple(int(v) for v in values)
    except (ValueError, TypeError, json.JSONDecodeError):
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


# -- commands ----------------------------------------------------------------


def cmd_fan_check(args, report):
    fan = load_fan(args.file)
    report.inputs_digest = _digest(fan.to_json())
    complete = is_complete(fan)
    cl = class_group(fan)
    sing = singular_cones(fan)
    report.payload = {
        "name": fan.name, "dim": fan.dim, "n_rays": fan.n_rays,
        "simplicial": True, "complete": complete,
        "fano": is_fano(fan) if complete else False,
        "smooth": not sing,
        "singular_cones": [list(c.rays) for c in sing],
        "walls": len(walls(fan)) if complete else None,
        "class_group": {"rank": cl.rank, "torsion": list(cl.torsion)},
        # normalization is reported as data; warnings are reserved for assumptions
        "primitivized_rays": [int(w.split(":")[1]) for w in fan.warnings
                              if w.startswith("ray-primitivized:")],
    }
    report.table = "\n".join(f"{k}: {v}" for k, v in report.payload.items())


def cmd_coh(args, report):
    fan = load_fan(args.file)
    D = parse_int_list(args.divisor)
    report.inputs_digest = _digest({"fan": fan.to_json(), "D": list(D)})
    if len(D) != fan.n_rays:
        raise UsageError(f"-D has {len(D)} entries, the fan has {fan.n_rays} rays")
    method = resolved_method(fan, D, args.method)
    h = cohomology_dims(fan, D, args.method)
    report.payload = {"dims": list(h.dims), "method": method}
    report.table = f"h^i = {list(h.dims)}  ({method})"


def cmd_intersect(args, report):
    fan = load_fan(args.file)
    exps = parse_int_list(args.exponents)
    report.inputs_digest = _digest({"fan": fan.to_json(), "m": list(exps)})
    if len(exps) != fan.n_rays or any(e < 0 for e in exps):
        raise UsageError(f"-m needs {fan.n_rays} non-negative exponents")
    value = monomial_intersection(fan, exps)
    report.payload = {"value": value}
    report.table = f"{value.numerator}/{value.denominator}"


def _cy_report(args, report):
    Z = load_cy(args.file)
    report.inputs_digest = _digest(Z.to_json())
    return Z


def cmd_smooth(args, report):
    Z = _cy_report(args, report)
    cert = smoothness_certificate(Z, all_paths=args.all_paths, force_path=args.force_path)
    report.warnings += cert.assumptions
    report.payload = cert.to_json()
    lines = [f"verdict: {cert.verdict}"]
    lines += [f"  ray {r.ray}: {r.path or 'NOT CERTIFIED'}" for r in cert.per_ray]
    if cert.verdict == "rejected":
        report.exit_code = 1
        lines += [f"  failed check: {c.name} ({c.detail})" for c in cert.validation.failures]
    report.table = "\n".join(lines)


def cmd_hodge(args, report):
    Z = _cy_report(args, report)
    cert = smoothness_certificate(Z, all_paths=args.all_paths)
    report.warnings += cert.assumptions
    payload = {"verdict": cert.verdict, "per_ray": [r.to_json() for r in cert.per_ray],
               "assumptions": cert.assumptions}
    if cert.verdict != "smooth":
        payload["validation"] = cert.validation.to_json()
        report.payload = payload
        report.exit_code = 1
        report.table = f"verdict: {cert.verdict}; no Hodge numbers reported"
        return
    diamond = hodge_diamond(Z, cert)
    m = diamond.m
    hodge = {"m": m, "h11": diamond[1, 1], "h21": diamond[2, 1], "table": diamond.h}
    if m == 4:
        hodge["h31"] = diamond[3, 1]
        hodge["h22"] = diamond[2, 2]
    payload["hodge"] = hodge
    # kept outside "hodge" so that h11 and h21 stay adjacent in sorted output
    payload["h11_certified"] = h11(Z).certified
    payload["cross_checks"] = diamond.cross_checks
    if args.oracle:
        payload["oracle"] = {"euler_from_chern": diamond.cross_checks["euler"]["from_chern"],
                             "chern_numbers": chern_numbers_ci(Z)}
    report.payload = payload
    report.table = diamond.pretty()


def cmd_catalog(args, report):
    if args.action == "list":
        report.payload = {"entries": catalog.names()}
        report.table = "\n".join(catalog.names())
        return
    if not args.name:
        raise UsageError("catalog emit needs an entry name")
    Z = catalog.catalog_entry(args.name)
    doc = Z.to_json()
    report.inputs_digest = _digest(doc)
    report.payload = doc
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(doc) + "\n")
    report.table = dumps(doc)


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="cytoric", parents=[fmt],
                                description="Toric Calabi-Yau deformation and Hodge toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    fan = sub.add_parser("fan", parents=[fmt], help="fan checks")
    fan.add_argument("action", choices=("check",))
    fan.add_argument("file")
    fan.set_defaults(func=cmd_fan_check)

    coh = sub.add_parser("coh", parents=[fmt], help="line bundle cohomology")
    coh.add_argument("file")
    coh.add_argument("-D", dest="divisor", required=True)
    coh.add_argument("--method", choices=("chamber", "nef-fastpath", "auto"), default="auto")
    coh.set_defaults(func=cmd_coh)

    inter = sub.add_parser("intersect", parents=[fmt], help="intersection numbers")
    inter.add_argument("file")
    inter.add_argument("-m", dest="exponents", required=True)
    inter.set_defaults(func=cmd_intersect)

    smooth = sub.add_parser("smooth", parents=[fmt], help="smoothness certificate")
    smooth.add_argument("file")
    smooth.add_argument("--all-paths", action="store_true")
    smooth.add_argument("--force-path", choices=PATHS)
    smooth.set_defaults(func=cmd_smooth)

    hodge = sub.add_parser("hodge", parents=[fmt], help="Hodge diamond")
    hodge.add_argument("file")
    hodge.add_argument("--oracle", action="store_true")
    hodge.add_argument("--all-paths", action="store_true")
    hodge.set_defaults(func=cmd_hodge)

    cat = sub.add_parser("catalog", parents=[fmt], help="built-in fixtures")
    cat.add_argument("action", choices=("list", "emit"))
    cat.add_argument("name", nargs="?")
    cat.add_argument("-o", "--output")
    cat.set_defaults(func=cmd_catalog)
    return p


def run(argv):
    """Execute one command; never raises for library or usage errors."""
    argv = list(argv)
    report = RunReport(command=list(argv))
    # integer lists may start with a minus sign; glue them to their flag
    # so argparse does not read "-4,0,0" as an option
    for i in range(len(argv) - 1, 0, -1):
        if argv[i - 1] in ("-D", "-m") and argv[i].startswith("-"):
            argv[i - 1:i + 1] = [argv[i - 1] + "=" + argv[i]]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        report.exit_code = 2 if exc.code else 0
        if exc.code:
            report.payload = {"error": {"type": "UsageError", "message": "invalid arguments"}}
        return report
    report.format = getattr(args, "format", "json")
    try:
        args.func(args, report)
    except UsageError as exc:
        report.exit_code = 2
        report.payload = {"error": {"type": "UsageError", "message": str(exc)}}
    except CrossCheckError as exc:
        report.exit_code = 3
        report.payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    except CytoricError as exc:
        report.exit_code = 1
        report.payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    # the same assumption can be logged by several stages
    report.warnings = list(dict.fromkeys(report.warnings))
    return report


def main(argv=None):
    report = run(sys.argv[1:] if argv is None else argv)
    if report.format == "json":
        print(dumps(report.to_json()))
    elif report.exit_code and "error" in report.payload:
        err = report.payload["error"]
        print(f"error ({err['type']}): {err['message']}", file=sys.stderr)
    else:
        print(report.table)
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
