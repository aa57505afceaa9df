"""Command-line front end. Every command prints one JSON document; exit 0 iff all checks pass."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .algebra import verify_algebra
from .analysis import chevalley_check, dual_double_coset_decomposition, kaplansky_check
from .bicross import (ExactFactorization, biperfect_group_test, biperfect_test, bicrossproduct,
                      duality_check, find_exact_factorizations)
from .gallery import BUILDERS, GalleryError, entries, run_entry
from .group import group_from_json, symmetric_group
from .hopf import HopfPresentation, TensorSquareElement, presentations_equal, verify_hopf
from .pointed_super import (Datum, DatumError, SuperGroupDatum, biproduct_check, bosonize,
                            build_hd, hd_report, minimal_triangular_structures, s4_check,
                            supergroup_algebra, unbosonize)
from .report import Report
from .rmatrix import triangular_report, verify_quasitriangular
from .scalar import field, scalar_from_json
from .twist import TwistError, find_gauge, twist_hopf, twist_r, verify_twist

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, path: str | None = None, line: int | None = None,
                 column: int | None = None):
        super().__init__(message)
        self.path, self.line, self.column = path, line, column

    def to_json(self) -> dict:
        out = {"error": "usage", "message": str(self)}
        if self.path is not None:
            out["path"] = self.path
        if self.line is not None:
            out["line"], out["column"] = self.line, self.column
        return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read file: {e.strerror}", path) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON: {e.msg}", path, e.lineno, e.colno) from e


def _parse(path: str, what: str, fn):
    data = _read_json(path)
    try:
        return fn(data)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise UsageError(f"invalid {what}: {e}", path) from e


def _load_hopf(path: str, conductor: int | None) -> HopfPresentation:
    H = _parse(path, "Hopf file", HopfPresentation.from_json)
    if conductor is not None and conductor != H.F.n:
        if conductor % H.F.n:
            raise UsageError(f"--conductor {conductor} is not a multiple of {H.F.n}", path)
        H = H.embedded(conductor)
    return H


def _load_tensor(H: HopfPresentation, path: str) -> TensorSquareElement:
    def parse(data):
        N = int(data.get("conductor", H.F.n)) if isinstance(data, dict) else H.F.n
        M = data["coeffs"] if isinstance(data, dict) else data
        if len(M) != H.dim or any(len(r) != H.dim for r in M):
            raise ValueError("coefficient matrix must be dim x dim")
        out = {}
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                c = scalar_from_json(x, N)
                if c:
                    out[(i, j)] = c.embed(H.F.n) if N != H.F.n else c
        return TensorSquareElement(H, out)
    return _parse(path, "tensor file", parse)


def _result(report: Report, payload: dict | None = None) -> tuple[int, dict]:
    out = {"ok": report.ok, "report": report.to_json()}
    if payload:
        out.update(payload)
    if not report.ok:
        out["failing"] = [c.axiom for c in report.failures()]
    return (EXIT_OK if report.ok else EXIT_FAIL), out


# ---------------------------------------------------------------- gallery / report

def _gallery_params(args) -> dict:
    if args.name in ("sweedler", "supergroup_sign"):
        return {"lambda": 1 if args.lam is None else args.lam}
    if args.name == "hn":
        return {"n": 2 if args.n is None else args.n}
    if args.name == "cotriangular_p3":
        return {"det": args.det}
    return {}


def _lambda_value(text: str):
    from fractions import Fraction
    try:
        f = Fraction(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from e
    return int(f) if f.denominator == 1 else str(f)


def cmd_gallery(args):
    if args.name == "list":
        return EXIT_OK, {"ok": True, "entries": [{"name": e.name, "params": e.params,
                                                  "expected": e.expected} for e in entries()],
                         "builders": sorted(BUILDERS)}
    try:
        res = run_entry(args.name, _gallery_params(args), args.conductor)
    except GalleryError as e:
        raise UsageError(str(e)) from e
    payload = res.to_json(include_objects=not args.summary)
    payload.pop("report")
    return _result(res.report, payload)


def _run_one(item):
    name, params = item
    res = run_entry(name, params)
    return {"entry": res.report.info.get("manifest_entry", name), "ok": res.report.ok,
            "failing": [c.axiom for c in res.report.failures()], "properties": res.properties}


def cmd_report(args):
    todo = [(e.name, e.params) for e in entries() if not (args.skip and e.name in args.skip)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_run_one, todo))
    else:
        rows = [_run_one(t) for t in todo]
    rep = Report("gallery")
    for r in rows:
        rep.check(r["entry"], r["ok"], r["failing"] or None)
    return _result(rep, {"entries": rows})


# ---------------------------------------------------------------- verify

def cmd_verify(args):
    H = _load_hopf(args.file, args.conductor)
    if args.what == "algebra":
        return _result(verify_algebra(H.algebra))
    if args.what == "hopf":
        return _result(verify_hopf(H))
    if not args.r:
        raise UsageError(f"verify {args.what} needs --r <tensor.json>")
    R = _load_tensor(H, args.r)
    if args.what == "quasitriangular":
        rep = Report("quasitriangular")
        rep.extend(verify_hopf(H), "hopf: ")
        rep.extend(verify_quasitriangular(H, R), "qt: ")
        return _result(rep)
    rep = triangular_report(H, R)
    return _result(rep)


# ---------------------------------------------------------------- twist

def _twist_or_fail(H, J, rep: Report):
    try:
        return verify_twist(H, J)
    except TwistError as e:
        rep.extend(e.report, "twist: ")
        rep.check(e.kind, False)
        return None


def cmd_twist(args):
    H = _load_hopf(args.hopf, args.conductor)
    J = _load_tensor(H, args.twist)
    rep = Report(f"twist {args.action}")
    T = _twist_or_fail(H, J, rep)
    if T is None:
        return _result(rep)
    rep.extend(T.report, "twist: ")
    if args.action == "verify":
        return _result(rep)
    if args.action == "apply":
        HJ = twist_hopf(H, T, verify=False)
        if args.r is None and not H.is_cocommutative():
            rep.extend(verify_hopf(HJ), "twisted: ")
            return _result(rep, {"hopf": HJ.to_json()})
        RJ = twist_r(T, _load_tensor(H, args.r) if args.r else None)
        rep.extend(triangular_report(HJ, RJ), "twisted: ")
        return _result(rep, {"hopf": HJ.to_json(), "R": RJ.to_json()})
    if not args.other:
        raise UsageError("twist gauge needs --other <twist.json>")
    Jp = _load_tensor(H, args.other)
    T2 = _twist_or_fail(H, Jp, rep)
    if T2 is None:
        return _result(rep)
    g = find_gauge(H, T.J, T2.J, budget=args.budget)
    # an exhausted budget is inconclusive, not a failure
    rep.info["gauge"] = g.status
    return _result(rep, {"gauge": g.to_json()})


# ---------------------------------------------------------------- bicross

def _group_arg(args):
    if args.symmetric:
        return symmetric_group(args.symmetric)[0]
    if not args.group:
        raise UsageError("give --group <group.json> or --symmetric n")
    return _parse(args.group, "group file", group_from_json)


def _subgroup(G, text: str, name: str):
    try:
        elems = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError as e:
        raise UsageError(f"{name} must be a comma separated list of element indices") from e
    try:
        return G.subgroup(elems)
    except ValueError as e:
        raise UsageError(f"{name}: {e}") from e


def cmd_bicross(args):
    G = _group_arg(args)
    F = field(args.conductor) if args.conductor else None
    if args.action == "search":
        facts = find_exact_factorizations(G, limit=args.budget)
        rows = [{"G1": list(f.G1.elements), "G2": list(f.G2.elements),
                 "biperfect_group_test": biperfect_group_test(G, f.G1, f.G2)} for f in facts]
        rep = Report("exact factorizations")
        rep.info["count"] = len(rows)
        return _result(rep, {"factorizations": rows})
    if not (args.g1 and args.g2):
        raise UsageError(f"bicross {args.action} needs --g1 and --g2")
    try:
        f = ExactFactorization(G, _subgroup(G, args.g1, "--g1"), _subgroup(G, args.g2, "--g2"))
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.action == "build":
        B = bicrossproduct(f, F)
        rep = Report("bicrossproduct")
        rep.extend(B.report, "hopf: ")
        rep.extend(duality_check(f, F), "duality: ")
        return _result(rep, {"hopf": B.hopf.to_json(), "antipode_parsing": B.antipode_parsing})
    rep = Report("biperfectness")
    if args.group_only:
        res = {"group_theoretic": biperfect_group_test(G, f.G1, f.G2)}
    else:
        res = biperfect_test(f, F)
        rep.check("group-theoretic test agrees with grouplike counts", res["consistent"], res)
    return _result(rep, {"biperfect": res})


# ---------------------------------------------------------------- pointed / super

def cmd_pointed(args):
    d = _parse(args.datum, "datum", Datum.from_json)
    try:
        H = build_hd(d, verify=False)
    except DatumError as e:
        raise UsageError(str(e), args.datum) from e
    rep = hd_report(d, H)
    s4 = s4_check(H)
    rep.extend(s4)
    rep.extend(biproduct_check(d, H), "biproduct: ")
    payload = {"hopf": H.to_json(), "S2_is_identity": s4.info["S2_is_identity"]}
    if args.triangular:
        try:
            T = minimal_triangular_structures(d, H=H)
            rep.extend(T.report, "T-datum: ")
            if T.R is not None:
                payload["R"] = T.R.to_json()
        except DatumError as e:
            payload["minimal_triangular"] = f"none: {e}"
    return _result(rep, payload)


def _element_arg(H: HopfPresentation, text: str) -> dict:
    try:
        i = int(text)
    except ValueError as e:
        raise UsageError("grouplike must be a basis index") from e
    if not 0 <= i < H.dim:
        raise UsageError(f"basis index {i} out of range")
    return {i: H.F.one}


def cmd_super(args):
    data = _read_json(args.file)
    if isinstance(data, dict) and "V" in data and "mult" not in data:
        try:
            Hs = supergroup_algebra(SuperGroupDatum.from_json(data))
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"invalid supergroup datum: {e}", args.file) from e
    else:
        Hs = _load_hopf(args.file, None)
    rep = Report(f"super {args.action}")
    g = _element_arg(Hs, args.element)
    try:
        if args.action == "bosonize":
            out = bosonize(Hs, g)
            rep.extend(verify_hopf(Hs), "input: ")
            rep.extend(verify_hopf(out), "output: ")
            back = unbosonize(out, g)
        else:
            out = unbosonize(Hs, g)
            rep.extend(verify_hopf(Hs), "input: ")
            rep.extend(verify_hopf(out), "output: ")
            back = bosonize(out, g)
    except ValueError as e:
        rep.check(f"{args.action} preconditions", False, str(e))
        return _result(rep)
    rep.check("round trip is the identity", presentations_equal(back, Hs))
    return _result(rep, {"hopf": out.to_json()})


# ---------------------------------------------------------------- analyze

def _load_group_twist(path: str, conductor):
    def parse(data):
        G = group_from_json(data["group"])
        N = int(data["conductor"])
        J = {}
        for a, b, c in data["J"]:
            x = scalar_from_json(c, N)
            if x:
                J[(int(a), int(b))] = x
        sub = data.get("subgroup")
        return G, J, N, (",".join(str(int(x)) for x in sub) if sub is not None else None)
    G, J, N, sub = _parse(path, "group twist file", parse)
    if conductor and conductor != N:
        if conductor % N:
            raise UsageError(f"--conductor {conductor} is not a multiple of {N}", path)
        J = {k: c.embed(conductor) for k, c in J.items()}
        N = conductor
    return G, J, field(N), sub


def cmd_analyze(args):
    if args.what == "cotriangular":
        G, J, F, sub = _load_group_twist(args.file, args.conductor)
        text = args.subgroup or sub
        if not text:
            raise UsageError("analyze cotriangular needs --subgroup or a 'subgroup' entry in the file")
        H = _subgroup(G, text, "--subgroup" if args.subgroup else "subgroup")
        dec = dual_double_coset_decomposition(G, H, J, F)
        return _result(dec.report, {"cosets": [c.to_json() for c in dec.cosets]})
    H = _load_hopf(args.file, args.conductor)
    if args.what == "chevalley":
        ch = chevalley_check(H)
        rep = Report("Chevalley property")
        rep.extend(ch.report)
        return _result(rep, {"chevalley": ch.to_json()})
    # divisibility is only asserted when requested: it is a theorem in the cotriangular semisimple case
    rep = kaplansky_check(H, assert_divisibility=args.assert_divisibility)
    return _result(rep)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trihopf", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--conductor", type=int, default=None,
                        help="work over Q(zeta_N); N must be a multiple of the natural conductor")
    common.add_argument("--budget", type=int, default=20000,
                        help="evaluation budget for bounded searches")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gallery", parents=[common],
                       help="build a named example and check it against the manifest")
    g.add_argument("name", choices=sorted(BUILDERS) + ["list"])
    g.add_argument("n", nargs="?", type=int, default=None, help="n for hn")
    g.add_argument("--lambda", dest="lam", type=_lambda_value, default=None)
    g.add_argument("--det", type=int, default=-1, choices=(1, -1))
    g.add_argument("--summary", action="store_true", help="omit the built presentation")
    g.set_defaults(func=cmd_gallery)

    r = sub.add_parser("report", parents=[common], help="run every manifest entry")
    r.add_argument("--skip", nargs="*", default=[], help="entry names to skip")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("verify", parents=[common], help="verify a presentation read from JSON")
    v.add_argument("what", choices=("algebra", "hopf", "quasitriangular", "triangular"))
    v.add_argument("file")
    v.add_argument("--r", help="R-matrix file")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("twist", parents=[common], help="verify, apply or compare twists")
    t.add_argument("action", choices=("verify", "apply", "gauge"))
    t.add_argument("hopf")
    t.add_argument("twist")
    t.add_argument("--other", help="second twist for gauge")
    t.add_argument("--r", help="R-matrix to twist (default 1⊗1 on cocommutative input)")
    t.set_defaults(func=cmd_twist)

    b = sub.add_parser("bicross", parents=[common], help="bicrossproducts of exact factorizations")
    b.add_argument("action", choices=("build", "biperfect", "search"))
    b.add_argument("--group")
    b.add_argument("--symmetric", type=int)
    b.add_argument("--g1")
    b.add_argument("--g2")
    b.add_argument("--group-only", action="store_true", help="skip building the Hopf algebra")
    b.set_defaults(func=cmd_bicross)

    pt = sub.add_parser("pointed", parents=[common], help="pointed Hopf algebras H(D)")
    pt.add_argument("action", choices=("build",))
    pt.add_argument("datum")
    pt.add_argument("--triangular", action="store_true", help="also build the canonical f_T")
    pt.set_defaults(func=cmd_pointed)

    s = sub.add_parser("super", parents=[common], help="bosonization of Hopf superalgebras")
    s.add_argument("action", choices=("bosonize", "unbosonize"))
    s.add_argument("file")
    s.add_argument("--element", default="1", help="basis index of the parity grouplike")
    s.set_defaults(func=cmd_super)

    a = sub.add_parser("analyze", parents=[common], help="representation-theoretic analyses")
    a.add_argument("what", choices=("cotriangular", "chevalley", "kaplansky"))
    a.add_argument("file")
    a.add_argument("--subgroup")
    a.add_argument("--assert-divisibility", action="store_true")
    a.set_defaults(func=cmd_analyze)
    return p


def run(argv=None) -> tuple[int, dict]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
        return code, ({"ok": True} if code == 0 else {"error": "usage", "message": "bad arguments"})
    try:
        return args.func(args)
    except UsageError as e:
        return EXIT_USAGE, e.to_json()
    except (ArithmeticError, AssertionError, ValueError) as e:
        return EXIT_FAIL, {"ok": False, "error": type(e).__name__, "message": str(e)}


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(dumps(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
