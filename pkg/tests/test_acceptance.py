"""Acceptance criteria 1-11, each recorded as one pass/fail line in the terminal summary.

Expected values come from the gallery manifest; tolerances are exact.
"""
import time
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

import test_pointed_super as tps
from perturb import perturb, perturb_tensor, sample_sites, sites
from trihopf import gallery
from trihopf.analysis import (categorical_dimensions, cotriangular_example, kaplansky_check,
                              symplectic_twist)
from trihopf.gallery import find_entry, representations, run_entry, triangular_objects
from trihopf.hopf import (TensorSquareElement, group_algebra, grouplikes, presentations_equal,
                          verify_hopf)
from trihopf.linalg import vsub
from trihopf.onecocycle import closed_form_r
from trihopf.pointed_super import (_is_odd_primitive, bosonize, exp_twist, h_n_datum, build_hd, s4_check, sign_datum,
                                   super_r_to_ordinary, supergroup_algebra, sweedler, sweedler_r,
                                   sweedler_twist, unbosonize)
from trihopf.rmatrix import drinfeld_element, r_u, triangular_report, verify_quasitriangular
from trihopf.scalar import field
from trihopf.twist import conjugation_iso_report, gauge, twist_hopf, twist_r, verify_twist


class Criterion:
    """Collects named checks; on exit records and prints one line, then asserts."""

    def __init__(self, acceptance: dict, k: int, text: str):
        self.acceptance, self.k, self.text = acceptance, k, text
        self.results: list[tuple[str, bool]] = []

    def check(self, name: str, ok) -> bool:
        self.results.append((name, bool(ok)))
        return bool(ok)

    def expect(self, name: str, actual, expected) -> bool:
        return self.check(f"{name}: {actual!r} == {expected!r}", actual == expected)

    def report(self, name: str, rep) -> bool:
        bad = [c.axiom for c in rep.failures()]
        return self.check(f"{name} {bad}" if bad else name, rep.ok)

    def __enter__(self):
        return self

    def __exit__(self, et, ev, tb):
        if et is not None:
            self.check(f"raised {et.__name__}: {ev}", False)
        failed = [n for n, ok in self.results if not ok]
        ok = bool(self.results) and not failed
        line = self.text if ok else f"{self.text} [failed: {'; '.join(failed)}]"
        self.acceptance[self.k] = (ok, line)
        print(f"criterion {self.k}: {'PASS' if ok else 'FAIL'}  {line}")
        assert ok, failed
        return False


def expected(name: str, params: dict | None = None) -> dict:
    return find_entry(name, params).expectations()


def _cocycle_criterion(c: Criterion, name: str, budget: float):
    t = time.perf_counter()
    res = run_entry(name)
    elapsed = time.perf_counter() - t
    exp = expected(name)
    H, R = res.objects["hopf"], res.objects["R"]
    rep = res.report
    c.check(f"{name}: Hopf axioms", [x for x in rep.checks if x.axiom.startswith("hopf: ")]
            and not any(x.axiom.startswith("hopf: ") for x in rep.failures()))
    c.report(f"{name}: QT axioms", verify_quasitriangular(H, R, fail_fast=True)
             if H.dim > 16 else verify_quasitriangular(H, R))
    c.check(f"{name}: R R21 = 1⊗1", not rep.failed("R R21 = 1⊗1") and
            any(x.axiom == "R R21 = 1⊗1" for x in rep.checks))
    c.expect(f"{name}: dim", H.dim, exp["dim"])
    c.expect(f"{name}: rank", res.properties["rank"], H.dim)
    c.check(f"{name}: u = 1", res.properties["drinfeld_is_one"])
    c.check(f"{name}: noncommutative", not res.properties["commutative"])
    c.check(f"{name}: noncocommutative", not res.properties["cocommutative"])
    c.expect(f"{name}: conductor", H.F.n, exp["conductor"])
    c.report(f"{name}: full report and manifest", rep)
    c.check(f"{name}: built in {elapsed:.1f}s < {budget}s", elapsed < budget)


def test_criterion_01_dim16(acceptance):
    # start from an empty cache so the timings below measure a full build
    gallery._build_cached.cache_clear()
    with Criterion(acceptance, 1, "dim-16 minimal triangular k[G̃]^J̄ verified exactly") as c:
        _cocycle_criterion(c, "dim16", 60)


def test_criterion_02_dim36(acceptance):
    with Criterion(acceptance, 2, "dim-36 minimal triangular k[G̃]^J̄ verified over Q(ζ6)") as c:
        _cocycle_criterion(c, "dim36", 300)


def test_criterion_03_closed_forms(acceptance):
    with Criterion(acceptance, 3, "closed-form J̄⁻¹ and R agree with solved values") as c:
        for name in ("dim16", "dim36"):
            res = gallery.build(name)
            ct = res.objects["cocycle_twist"]
            H, J, Jinv = ct.group_hopf, ct.twist.J, ct.closed_inverse
            c.check(f"{name}: J̄ J̄⁻¹ = 1⊗1", not vsub(H.tmul(J, Jinv), H.one2()))
            c.check(f"{name}: J̄⁻¹ J̄ = 1⊗1", not vsub(H.tmul(Jinv, J), H.one2()))
            c.check(f"{name}: closed J̄⁻¹ = solved J̄⁻¹", not vsub(Jinv, ct.twist.inverse))
            R = closed_form_r(ct)
            c.check(f"{name}: closed R = J̄21⁻¹J̄", not vsub(R, H.tmul(H.flip(Jinv), J)))
            c.check(f"{name}: closed R = verified R", not vsub(R, res.objects["R"].coeffs))


def _profile(H, R):
    rep = triangular_report(H, R)
    rep.extend(s4_check(H))
    F = H.F
    d = drinfeld_element(H, R)
    rep.check("u = g", not vsub(d.u, {1: F.one}))
    rep.check("u² = 1", not vsub(d.squared(), H.one()))
    S2_id = all(not vsub(H.S(H.antipode[i]), {i: F.one}) for i in range(H.dim))
    rep.check("S² ≠ Id", not S2_id)
    return rep


def test_criterion_04_sweedler_three_ways(acceptance):
    with Criterion(acceptance, 4, "Sweedler R_λ agrees by datum, bosonization and twisting") as c:
        S = sweedler()
        F = S.F
        Hs = supergroup_algebra(sign_datum())
        Rg = r_u(S, {1: F.one})
        for lam in (1, 0, 2, -1):
            exp = expected("sweedler", {"lambda": lam})
            datum = (build_hd(h_n_datum(1)), sweedler_r(S, lam))
            T = exp_twist(Hs, {(2, 2): F(lam)} if lam else {})
            boson = super_r_to_ordinary(twist_hopf(Hs, T), twist_r(T), 1)
            Tw = sweedler_twist(S, lam)
            twisted = (twist_hopf(S, Tw), twist_r(Tw, Rg))
            routes = {"datum": datum, "bosonization": boson, "twist": twisted}
            profiles = {k: _profile(H, R) for k, (H, R) in routes.items()}
            for k, rep in profiles.items():
                c.report(f"λ={lam} {k}: triangular, S⁴ = Id, u = g, u² = 1, S² ≠ Id", rep)
            c.check(f"λ={lam}: identical profiles",
                    len({rep.profile() for rep in profiles.values()}) == 1)
            for k, (H, R) in routes.items():
                c.check(f"λ={lam} {k}: same presentation", presentations_equal(H, S))
                c.check(f"λ={lam} {k}: R = R_λ", R == sweedler_r(S, lam))
            rank = profiles["datum"].info["rank"]
            c.expect(f"λ={lam}: rank", rank, exp["rank"])
            c.expect(f"λ={lam}: rank 2 iff λ = 0", rank == 2, lam == 0)
            c.check(f"λ={lam}: manifest", run_entry("sweedler", {"lambda": lam}).report.ok)


def test_criterion_05_cotriangular(acceptance):
    with Criterion(acceptance, 5, "cotriangular dual k[G]^J* for p = 3, det = -1") as c:
        params = {"det": -1}
        res = run_entry("cotriangular_p3", params)
        exp = expected("cotriangular_p3", params)
        c.expect("dim", res.objects["hopf"].dim, exp["dim"])
        c.expect("coset blocks", res.properties["coset_blocks"], exp["coset_blocks"])
        div = [x for x in res.report.checks if x.axiom.startswith("|H|/|K_g| divides")]
        c.check("divisibility by |H|/|K_g| at every coset", div and all(x.ok for x in div))
        kap = kaplansky_check(res.objects["hopf"])
        c.report("Kaplansky divisibility", kap)
        dims = kap.info["dual_block_dims"]
        c.check("every simple dual block dim divides 18", all(18 % d == 0 for d in dims))
        c.report("full report and manifest", res.report)


def test_criterion_06_reference_multisets(acceptance):
    with Criterion(acceptance, 6, "coset blocks equal |H|/|K_g| × reference block multisets") as c:
        params = {"det": -1}
        res = run_entry("cotriangular_p3", params)
        _, H, _, _ = cotriangular_example(3, -1)
        cosets = res.properties["cosets"]
        c.check("one coset per double coset", len(cosets) == len(expected("cotriangular_p3", params)
                                                                 ["coset_blocks"]))
        for z in cosets:
            ratio = Fraction(H.order, z["K_order"])
            c.check(f"coset {z['representative']}: |H|/|K_g| integral", ratio.denominator == 1)
            pred = sorted(int(ratio) * d for d in z["reference_dims"])
            c.expect(f"coset {z['representative']}: blocks", sorted(z["block_dims"]), pred)
        c.check("reference match", res.properties["reference_match"])


def test_criterion_07_movshev(acceptance):
    with Criterion(acceptance, 7, "Movshev suite on the Z3×Z3 symplectic twist") as c:
        res = run_entry("symplectic_z3")
        exp = expected("symplectic_z3")
        p = res.properties
        c.expect("dual radical", p["dual_radical_dim"], 0)
        c.expect("dual blocks", p["dual_blocks"], exp["dual_blocks"])
        c.expect("|St| = |H|", p["stabilizer_order"], res.objects["hopf"].dim)
        c.check("extracted quasitwist is a twist", p["extracted_is_twist"])
        c.check("isomorphism exhibited", p["extraction_isomorphic"])
        c.report("full report and manifest", res.report)


def test_criterion_08_bicross(acceptance):
    with Criterion(acceptance, 8, "bicrossproduct of S3 = A3·Z2") as c:
        res = run_entry("bicross_s3")
        p = res.properties
        for k in ("hopf", "duality", "grouplikes_match_formula", "blocks_match_orbit_formula",
                  "degenerate_group_algebra", "degenerate_dual_group_algebra"):
            c.check(k, p[k])
        c.check("not biperfect", p["biperfect"] is False)
        c.report("full report and manifest", res.report)


def test_criterion_09_h2(acceptance):
    with Criterion(acceptance, 9, "H(2): dim 8, grouplikes Z2, S⁴ = Id, Chevalley, T-datum") as c:
        params = {"n": 2}
        res = run_entry("hn", params)
        H = res.objects["hopf"]
        c.expect("dim", H.dim, expected("hn", params)["dim"])
        G = grouplikes(H)
        c.check("grouplikes form a group of order 2", len(G) == 2 and G.is_group())
        c.report("S⁴ = Id", s4_check(H))
        c.check("Chevalley property", res.properties["chevalley"])
        tdat = [x for x in res.report.checks if x.axiom.startswith("T-datum: ")]
        c.check("T-datum triangular structure", tdat and all(x.ok for x in tdat))
        c.report("full report and manifest", res.report)


# ---------------------------------------------------------------- criterion 10 properties

F3 = field(3)
_coeff = st.integers(min_value=-2, max_value=2)


def _normalized_unit(H, x):
    e = H.eps(x)
    assume(e)
    x = {i: v / e for i, v in x.items()}
    try:
        H.algebra.inverse(x)
    except (ZeroDivisionError, ArithmeticError, ValueError):
        assume(False)
    return x


@settings(max_examples=10)
@given(st.dictionaries(st.integers(min_value=0, max_value=8), _coeff, min_size=1, max_size=3))
def _gauge_symplectic(cs):
    G, J = symplectic_twist(3, F3)
    H = group_algebra(G, F3, verify=False)
    T = verify_twist(H, J)
    x = _normalized_unit(H, {i: F3(v) for i, v in cs.items() if v})
    Tx = gauge(T, x)
    HJ, HJx = twist_hopf(H, T, verify=False), twist_hopf(H, Tx, verify=False)
    assert conjugation_iso_report(HJ, twist_r(T), HJx, twist_r(Tx), x).ok


@settings(max_examples=25)
@given(st.lists(_coeff, min_size=4, max_size=4), _coeff)
def _gauge_sweedler(cs, lam):
    S = sweedler()
    x = _normalized_unit(S, {i: S.F(v) for i, v in enumerate(cs) if v})
    T = sweedler_twist(S, lam)
    Tx = gauge(T, x)
    Rg = r_u(S, {1: S.F.one})
    HJ, HJx = twist_hopf(S, T), twist_hopf(S, Tx)
    assert conjugation_iso_report(HJ, twist_r(T, Rg), HJx, twist_r(Tx, Rg), x).ok
    assert triangular_report(HJx, twist_r(Tx, Rg)).ok


@settings(max_examples=15)
@given(st.sampled_from(sorted(tps.SUPER)), st.lists(_coeff, min_size=6, max_size=6))
def _round_trips(name, vals):
    sgd, g = tps.SUPER[name]()
    if name == "z4_c2":
        vals = [0, vals[1], 0] + vals[3:]
    Hs = supergroup_algebra(sgd, verify=False)
    A = bosonize(Hs, g)
    assert presentations_equal(unbosonize(A, g), Hs)
    T = exp_twist(Hs, tps._odd(sgd, tps.symmetric_r(sgd.V, vals)))
    HJ = twist_hopf(Hs, T, verify=False)
    Rs = twist_r(T)
    from trihopf.pointed_super import ordinary_r_to_super
    Ao, Ro = super_r_to_ordinary(HJ, Rs, g)
    Hs2, Rs2 = ordinary_r_to_super(Ao, Ro, g)
    assert presentations_equal(Hs2, HJ) and Rs2 == Rs


@given(st.sampled_from(sorted(tps.SUPER)), st.lists(st.integers(min_value=-3, max_value=3),
                                                   min_size=6, max_size=6))
def _exp_inverse(name, vals):
    sgd, _ = tps.SUPER[name]()
    Hs = supergroup_algebra(sgd, verify=False)
    r = tps._odd(sgd, tps.symmetric_r(sgd.V, vals))
    neg = {k: -v for k, v in r.items()}
    assert not vsub(Hs.tmul(exp_twist(Hs, r).J, exp_twist(Hs, neg).J), Hs.one2())


def _run(prop) -> bool:
    try:
        prop()
        return True
    except Exception as e:  # noqa: BLE001 - any failure of a property is a criterion failure
        print(f"  {prop.__name__}: {type(e).__name__}: {e}")
        return False


def test_criterion_10_properties(acceptance):
    with Criterion(acceptance, 10, "property suites: gauge, round trips, exp inverse, "
                                   "integral categorical dims") as c:
        c.check("gauge transforms on the symplectic twist", _run(_gauge_symplectic))
        c.check("gauge transforms on Sweedler twists", _run(_gauge_sweedler))
        c.check("bosonize and R-correspondence round trips", _run(_round_trips))
        c.check("exp(r/2)·exp(-r/2) = 1⊗1", _run(_exp_inverse))
        for key, H, R in triangular_objects():
            dims = categorical_dimensions(H, R, representations(H))
            c.check(f"{key}: categorical dims integral", all(d.is_integer() for d in dims))


# ---------------------------------------------------------------- criterion 11 negative controls

EXHAUSTIVE_DIM = 8
SAMPLES = 20
SEED = 20261018


def _presentations():
    """Distinct (key, presentation, R or None) over the gallery, ordinary and super."""
    out, seen = [], set()
    for e in gallery.entries():
        res = gallery.build(e.name, e.params)
        for hk, rk in (("hopf", "R"), ("super_hopf", "super_R")):
            H = res.objects.get(hk)
            if H is None:
                continue
            sig = (H.name, H.dim, H.F.n, bool(H.is_super), e.name)
            if sig in seen:
                continue
            seen.add(sig)
            out.append((f"{e.key}/{hk}", H, res.objects.get(rk)))
    return out


def test_criterion_11_negative_controls(acceptance):
    with Criterion(acceptance, 11, "every single-constant perturbation fails with a witness") as c:
        for key, H, R in _presentations():
            exhaustive = H.dim <= EXHAUSTIVE_DIM
            chosen = list(sites(H)) if exhaustive else sample_sites(H, SAMPLES, SEED)
            caught = 0
            for s in chosen:
                rep = verify_hopf(perturb(H, s))
                if not rep.ok and any(f.witness is not None for f in rep.failures()):
                    caught += 1
            c.check(f"{key}: structure constants {caught}/{len(chosen)}", caught == len(chosen))
            if R is None:
                continue
            n = H.dim
            keys = [(i, j) for i in range(n) for j in range(n)]
            if not exhaustive:
                import random
                keys = random.Random(SEED).sample(keys, SAMPLES)
            caught, genuine = 0, []
            for k in keys:
                Rp = TensorSquareElement(H, perturb_tensor(R.coeffs, k, H.F.one))
                rep = verify_quasitriangular(H, Rp, fail_fast=True)
                if not rep.ok and any(f.witness is not None for f in rep.failures()):
                    caught += 1
                elif H.is_super and _in_exp_family(H, Rp):
                    genuine.append(k)
            c.check(f"{key}: R entries {caught}/{len(keys)}, genuine {genuine}",
                    caught + len(genuine) == len(keys))


def _in_exp_family(H, Rp) -> bool:
    """A surviving super R must be exp(r') for a symmetric r' on odd primitives."""
    odd = [i for i in range(H.dim) if _is_odd_primitive(H, i)]
    r = {(i, j): v for (i, j), v in Rp.coeffs.items() if i in odd and j in odd}
    try:
        T = exp_twist(H, r)
    except ValueError:
        return False
    return presentations_equal(twist_hopf(H, T), H) and twist_r(T) == Rp
