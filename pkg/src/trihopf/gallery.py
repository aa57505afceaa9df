"""Named example objects, their builders, and the versioned manifest of expected properties."""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

from .algebra import block_profile, simple_modules
from .analysis import (chevalley_check, cotriangular_example, dual_double_coset_decomposition,
                       kaplansky_check, regular_representation, symplectic_twist,
                       trivial_representation)
from .bicross import (ExactFactorization, biperfect_test, bicrossproduct, duality_check,
                      expected_block_dims)
from .group import symmetric_group
from .hopf import (HopfPresentation, TensorSquareElement, dual_hopf, group_algebra,
                   grouplike_count, presentations_equal, verify_hopf)
from .linalg import vsub
from .onecocycle import dim16_datum, dim36_datum, rmatrix_from_cocycle, verify_cocycle
from .pointed_super import (DatumError, biproduct_check, bosonize, build_hd, exp_twist,
                            exp_twist_report, exterior_datum, h_n_datum, hd_report,
                            minimal_triangular_structures, r_correspondence_report, s4_check,
                            sign_datum, super_cocommutative, super_r_to_ordinary,
                            supergroup_algebra, sweedler_r, unbosonize, z4z4_datum)
from .report import Report
from .rmatrix import drinfeld_element, minimal_part, triangular_report
from .scalar import field
from .twist import (extract_quasitwist, gcoalgebra_iso_report, movshev_coalgebra,
                    movshev_dual_algebra, movshev_stabilizer, twist_hopf, twist_r, verify_twist)

MANIFEST_VERSION = 1


class GalleryError(ValueError):
    """Unknown entry, bad parameters or an unsupported conductor override."""


@dataclass
class GalleryEntry:
    name: str
    params: dict
    expected: dict = dc_field(default_factory=dict)

    def expectations(self) -> dict:
        return {k: v["value"] for k, v in self.expected.items()}

    def provenance(self) -> dict:
        return {k: v["provenance"] for k, v in self.expected.items()}

    @property
    def key(self) -> str:
        return entry_key(self.name, self.params)


def entry_key(name: str, params: dict) -> str:
    if not params:
        return name
    return name + "[" + ",".join(f"{k}={params[k]}" for k in sorted(params)) + "]"


def load_manifest(path=None) -> dict:
    if path is None:
        text = resources.files("trihopf").joinpath("data/gallery.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if data.get("version") != MANIFEST_VERSION:
        raise GalleryError(f"manifest version {data.get('version')} is not {MANIFEST_VERSION}")
    tags = set(data["provenance_tags"])
    for e in data["entries"]:
        for k, v in e["expected"].items():
            if v.get("provenance") not in tags:
                raise GalleryError(f"{e['name']}.{k} has no valid provenance tag")
    return data


def entries(path=None) -> list[GalleryEntry]:
    return [GalleryEntry(e["name"], dict(e.get("params", {})), e["expected"])
            for e in load_manifest(path)["entries"]]


def find_entry(name: str, params: dict | None = None) -> GalleryEntry | None:
    key = entry_key(name, params or {})
    return next((e for e in entries() if e.key == key), None)


class GalleryResult:
    """Computed properties, the verification report and the built objects of one entry.

    objects["hopf"] and objects["R"] are present for every triangular example.
    """

    def __init__(self, name: str, params: dict, properties: dict, report: Report, objects: dict):
        self.name = name
        self.params = params
        self.properties = properties
        self.report = report
        self.objects = objects

    def compare(self, entry: GalleryEntry) -> Report:
        rep = Report(f"expectations {entry.key}")
        for k, want in sorted(entry.expectations().items()):
            got = self.properties.get(k)
            rep.check(f"expected {k}", got == want, {"expected": want, "actual": got})
        return rep

    def to_json(self, include_objects: bool = False) -> dict:
        out = {"name": self.name, "params": self.params, "properties": self.properties,
               "report": self.report.to_json()}
        if include_objects:
            out["objects"] = {k: v.to_json() for k, v in self.objects.items() if hasattr(v, "to_json")}
        return out


def _embed_pair(H: HopfPresentation, R: TensorSquareElement, m: int | None):
    if m is None or m == H.F.n:
        return H, R
    if m % H.F.n:
        raise GalleryError(f"conductor {m} is not a multiple of the natural conductor {H.F.n}")
    He = H.embedded(m)
    return He, TensorSquareElement(He, {k: c.embed(m) for k, c in R.coeffs.items()})


def _with_triangular(H, R, rep: Report, props: dict, conductor):
    """Re-verify over an enlarged field when a conductor override is requested."""
    if conductor is not None and conductor != H.F.n:
        H, R = _embed_pair(H, R, conductor)
        t = triangular_report(H, R, "embedded")
        rep.extend(t, f"conductor {conductor}: ")
    props["conductor"] = H.F.n
    return H, R


# ---------------------------------------------------------------- builders

def _sweedler(params: dict, conductor):
    lam = params.get("lambda", 1)
    d = h_n_datum(1)
    H = build_hd(d)
    F = H.F
    lam = F.coerce(_fraction(lam))
    R = sweedler_r(H, lam)
    rep = triangular_report(H, R, "Sweedler")
    s4 = s4_check(H)
    rep.extend(s4)
    du = drinfeld_element(H, R)
    u_g = not vsub(du.u, {1: F.one})
    u2 = not vsub(du.squared(), H.one())
    rep.check("u = g", u_g, du.u)
    rep.check("u² = 1", u2)
    rank = rep.info["rank"]
    props = {"dim": H.dim, "triangular": rep.ok, "rank": rank, "minimal": rank == H.dim,
             "u_equals_g": u_g, "u_squared_one": u2, "S2_identity": s4.info["S2_is_identity"],
             "S4_identity": s4.ok, "grouplike_count": grouplike_count(H)}
    H, R = _with_triangular(H, R, rep, props, conductor)
    return props, rep, {"hopf": H, "R": R}


def _hn(params: dict, conductor):
    n = int(params.get("n", 2))
    if n < 0:
        raise GalleryError("n must be non-negative")
    d = h_n_datum(n)
    H = build_hd(d, verify=False)
    rep = hd_report(d, H)
    s4 = s4_check(H)
    rep.extend(s4)
    rep.extend(biproduct_check(d, H), "biproduct: ")
    ch = chevalley_check(H)
    rep.extend(ch.report, "chevalley: ")
    props = {"dim": H.dim, "grouplike_count": grouplike_count(H), "S4_identity": s4.ok,
             "S2_identity": s4.info["S2_is_identity"], "radical_dim": ch.radical_dim,
             "chevalley": ch.is_hopf_ideal}
    objects = {"hopf": H}
    if n:
        T = minimal_triangular_structures(d, H=H)
        rep.extend(T.report, "T-datum: ")
        props["minimal_triangular"] = T.report.ok
        props["rank"] = T.report.info.get("rank")
        if T.R is not None:
            H, R = _with_triangular(H, T.R, rep, props, conductor)
            objects = {"hopf": H, "R": R}
    return props, rep, objects


def _cocycle(datum_fn, conductor):
    d = datum_fn()
    F = field(conductor) if conductor else None
    if F is not None and F.n % d.conductor():
        raise GalleryError(f"conductor {F.n} is not a multiple of {d.conductor()}")
    rep = verify_cocycle(d)
    ct = rmatrix_from_cocycle(d, F)
    rep.extend(ct.report)
    info = ct.report.info
    props = {"dim": ct.hopf.dim, "triangular": ct.report.ok, "rank": info["rank"],
             "drinfeld_is_one": info["drinfeld_is_one"], "commutative": info["commutative"],
             "cocommutative": info["cocommutative"], "conductor": ct.hopf.F.n}
    return props, rep, {"hopf": ct.hopf, "R": ct.R, "twist": ct.cocycle_twist.twist,
                        "cocycle_twist": ct.cocycle_twist}


def _dim16(params: dict, conductor):
    return _cocycle(dim16_datum, conductor)


def _dim36(params: dict, conductor):
    return _cocycle(dim36_datum, conductor)


def _symplectic_z3(params: dict, conductor):
    F = field(conductor or 3)
    if F.n % 3:
        raise GalleryError("conductor must be a multiple of 3")
    G, J = symplectic_twist(3, F)
    K = group_algebra(G, F)
    T = verify_twist(K, J)
    HJ = twist_hopf(K, T)
    RJ = twist_r(T)
    rep = triangular_report(HJ, RJ, "symplectic twist of k[(Z/3)²]")
    B = movshev_dual_algebra(G, F, J)
    prof = block_profile(B)
    st = movshev_stabilizer(G, F, J)
    rep.extend(st.report, "stabilizer: ")
    C = movshev_coalgebra(G, F, J)
    ex = extract_quasitwist(C)
    rep.extend(ex.report, "extraction: ")
    try:
        verify_twist(K, ex.J)
        is_twist = True
    except ValueError:
        is_twist = False
    rep.check("extracted quasitwist is a twist", is_twist)
    iso = gcoalgebra_iso_report(ex.iso, movshev_coalgebra(G, F, ex.J), C)
    rep.check("isomorphism to the original G-coalgebra exhibited", iso.ok)
    props = {"dim": HJ.dim, "dual_radical_dim": prof.radical_dim, "dual_blocks": list(prof.dims),
             "stabilizer_order": st.subgroup.order, "extracted_is_twist": is_twist,
             "extraction_isomorphic": iso.ok, "rank": rep.info["rank"],
             "drinfeld_is_one": rep.info["drinfeld_is_one"], "conductor": F.n}
    return props, rep, {"hopf": HJ, "R": RJ, "twist": T}


def _cotriangular(params: dict, conductor):
    det = int(params.get("det", -1))
    if det not in (1, -1):
        raise GalleryError("det must be 1 or -1")
    if conductor:
        raise GalleryError("the cotriangular example has a fixed conductor")
    G, H, J, F = cotriangular_example(3, det)
    dec = dual_double_coset_decomposition(G, H, J, F)
    rep = Report("cotriangular dual, p = 3")
    rep.extend(dec.report)
    K = group_algebra(G, F, verify=False)
    A = twist_hopf(K, verify_twist(K, J), verify=False)
    rep.extend(verify_hopf(A), "hopf: ")
    kap = kaplansky_check(A)
    rep.extend(kap, "kaplansky: ")
    props = {"dim": A.dim, "coset_blocks": [c.dims for c in dec.cosets],
             "reference_match": all(c.dims == c.predicted for c in dec.cosets),
             "kaplansky_divides": kap.info["divides"], "kaplansky_dims": kap.info["dual_block_dims"],
             "cosets": [c.to_json() for c in dec.cosets]}
    return props, rep, {"hopf": A}


def s3_factorization() -> ExactFactorization:
    """S3 = A3 · <(12)>."""
    G, perms = symmetric_group(3)
    A3 = G.subgroup([i for i, p in enumerate(perms) if p in ((0, 1, 2), (1, 2, 0), (2, 0, 1))])
    t = perms.index((1, 0, 2))
    return ExactFactorization(G, A3, G.subgroup([0, t]))


def _bicross_s3(params: dict, conductor):
    f = s3_factorization()
    F = field(conductor) if conductor else None
    B = bicrossproduct(f, F)
    H = B.hopf
    F = H.F
    rep = Report("bicrossproduct S3 = A3·Z2")
    rep.extend(B.report, "hopf: ")
    dual = duality_check(f, F)
    rep.extend(dual, "duality: ")
    bp = biperfect_test(f, F)
    rep.check("grouplike counts match the fixed-point formula", bp["consistent"], bp)
    dims = list(block_profile(H.algebra).dims)
    orbit = expected_block_dims(f, F)
    rep.check("block dims match the orbit formula", dims == orbit, {"blocks": dims, "formula": orbit})
    G = f.G
    whole, trivial = G.subgroup(list(G.elements)), G.subgroup([0])
    KG = group_algebra(G, F, verify=False)
    deg1 = presentations_equal(bicrossproduct(ExactFactorization(G, whole, trivial), F).hopf, KG)
    deg2 = presentations_equal(bicrossproduct(ExactFactorization(G, trivial, whole), F).hopf,
                               dual_hopf(KG, verify=False))
    rep.check("H(G, G, 1) = k[G]", deg1)
    rep.check("H(G, 1, G) = k[G]*", deg2)
    props = {"dim": H.dim, "hopf": B.report.ok, "duality": dual.ok, "biperfect": bp["biperfect"],
             "grouplike_count_H": bp["grouplike_count_H"],
             "grouplike_count_Hdual": bp["grouplike_count_Hdual"],
             "grouplikes_match_formula": bp["consistent"], "blocks_match_orbit_formula": dims == orbit,
             "block_dims": dims, "antipode_parsing": B.antipode_parsing,
             "degenerate_group_algebra": deg1, "degenerate_dual_group_algebra": deg2}
    return props, rep, {"hopf": H}


def _z4z4(params: dict, conductor):
    if conductor:
        raise GalleryError("this example has a fixed conductor")
    d = z4z4_datum()
    H = build_hd(d, verify=False)
    rep = hd_report(d, H)
    try:
        minimal_triangular_structures(d, H=H)
        status = "found"
    except DatumError as e:
        status = "none: n_g differs from n_g^-1" if "S(k) is empty" in str(e) else f"none: {e}"
    rep.check("no minimal triangular structure", status.startswith("none"), status)
    props = {"dim": H.dim, "hopf": rep.ok, "minimal_triangular_structures": status}
    return props, rep, {"hopf": H}


def _supergroup_sign(params: dict, conductor):
    if conductor:
        raise GalleryError("this example has a fixed conductor")
    Hs = supergroup_algebra(sign_datum())
    F = Hs.F
    lam = F.coerce(_fraction(params.get("lambda", 1)))
    rep = Report("C[Z2]⋉Λ(C)")
    rep.extend(verify_hopf(Hs), "super hopf: ")
    A = bosonize(Hs, 1)
    S = build_hd(h_n_datum(1), verify=False)
    same = presentations_equal(A, S)
    rep.check("bosonization = Sweedler", same)
    back = unbosonize(A, {1: F.one})
    rt = presentations_equal(back, Hs)
    rep.check("unbosonize(bosonize) = id", rt)
    r = {(2, 2): lam} if lam else {}
    T = exp_twist(Hs, r)
    HsJ = twist_hopf(Hs, T)
    Rs = twist_r(T)
    corr = r_correspondence_report(HsJ, Rs, 1)
    rep.extend(corr, "correspondence: ")
    Ao, Ro = super_r_to_ordinary(HsJ, Rs, 1)
    props = {"dim": Hs.dim, "super_cocommutative": super_cocommutative(Hs),
             "bosonization_is_sweedler": same, "round_trip": rt, "r_correspondence": corr.ok,
             "rank": corr.info["rank"]}
    return props, rep, {"hopf": Ao, "R": Ro, "super_hopf": HsJ, "super_R": Rs}


def _exterior2(params: dict, conductor):
    if conductor:
        raise GalleryError("this example has a fixed conductor")
    Hs = supergroup_algebra(exterior_datum(2))
    F = Hs.F
    v1, v2 = 1, 2
    nondeg = {(v1, v2): F.one, (v2, v1): F.one}
    deg = {(v1, v1): F.one}
    rep = Report("Λ(C²) with exp(r/2)")
    r1 = exp_twist_report(Hs, nondeg)
    r2 = exp_twist_report(Hs, deg)
    rep.extend(r1, "nondegenerate: ")
    rep.extend(r2, "degenerate: ")
    T = exp_twist(Hs, nondeg)
    Tm = exp_twist(Hs, {k: -c for k, c in nondeg.items()})
    inv = not vsub(Hs.tmul(T.J, Tm.J), Hs.one2())
    rep.check("exp(r/2)·exp(-r/2) = 1⊗1", inv)
    props = {"dim": Hs.dim, "minimal_iff_nondegenerate": r1.ok and r2.ok,
             "rank_nondegenerate": r1.info["rank"], "rank_degenerate": r2.info["rank"],
             "exp_inverse": inv}
    return props, rep, {"super_hopf": twist_hopf(Hs, T), "super_R": twist_r(T)}


def _fraction(x):
    from fractions import Fraction
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        if not x.is_integer():
            raise GalleryError("parameters must be exact; pass fractions as strings like '1/2'")
        return int(x)
    return x


BUILDERS = {
    "sweedler": _sweedler,
    "hn": _hn,
    "dim16": _dim16,
    "dim36": _dim36,
    "symplectic_z3": _symplectic_z3,
    "cotriangular_p3": _cotriangular,
    "bicross_s3": _bicross_s3,
    "z4z4_unbalanced": _z4z4,
    "supergroup_sign": _supergroup_sign,
    "exterior2": _exterior2,
}


@lru_cache(maxsize=None)
def _build_cached(name: str, frozen: tuple, conductor):
    return BUILDERS[name](dict(frozen), conductor)


def build(name: str, params: dict | None = None, conductor: int | None = None) -> GalleryResult:
    """Build one gallery object; results are cached since every builder is pure."""
    if name not in BUILDERS:
        raise GalleryError(f"unknown gallery entry '{name}'; known: {', '.join(sorted(BUILDERS))}")
    params = dict(params or {})
    props, rep, objects = _build_cached(name, tuple(sorted(params.items())), conductor)
    return GalleryResult(name, params, props, rep, objects)


def run_entry(name: str, params: dict | None = None, conductor: int | None = None) -> GalleryResult:
    """Build, then compare against the manifest entry with the same parameters when one exists."""
    res = build(name, params, conductor)
    rep = Report(res.report.subject, list(res.report.checks), dict(res.report.info))
    entry = find_entry(name, res.params)
    if entry is not None:
        rep.extend(res.compare(entry), "manifest: ")
        rep.info["manifest_entry"] = entry.key
    return GalleryResult(res.name, res.params, res.properties, rep, res.objects)


def triangular_objects() -> list[tuple[str, HopfPresentation, TensorSquareElement]]:
    """(key, H, R) for every ordinary triangular object in the manifest."""
    out = []
    seen = set()
    for e in entries():
        if e.key in seen:
            continue
        seen.add(e.key)
        res = build(e.name, e.params)
        if "R" in res.objects and not res.objects["hopf"].is_super:
            out.append((e.key, res.objects["hopf"], res.objects["R"]))
    return out


def representations(H: HopfPresentation) -> list:
    """Simple modules, the trivial and the regular representation."""
    return simple_modules(H.algebra) + [trivial_representation(H), regular_representation(H)]


def minimal_part_rank(H: HopfPresentation, R) -> int:
    return minimal_part(H, R)[1]
