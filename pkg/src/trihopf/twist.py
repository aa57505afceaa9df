"""Twists: verification, gauge transformations, twisted Hopf algebras and G-coalgebras."""
from __future__ import annotations

import itertools

from .algebra import StructureAlgebra, central_idempotents, jacobson_radical
from .group import Character, FiniteGroup, Subgroup, TwoCocycle, character_group
from .hopf import HopfPresentation, TensorSquareElement, check_hopf_map, tensor_inv_raw, verify_hopf
from .linalg import Span, mat_inverse, mat_rank, vacc, vaxpy, vscale, vsub
from .report import Report
from .scalar import CyclotomicField


class TwistError(ValueError):
    def __init__(self, kind: str, report: Report):
        super().__init__(f"{kind}: {[c.axiom for c in report.failures()]}")
        self.kind = kind
        self.report = report


def _coeffs(J) -> dict:
    return J.coeffs if isinstance(J, TensorSquareElement) else dict(J)


def quasitwist_report(H: HopfPresentation, J) -> Report:
    J = _coeffs(J)
    rep = Report("twist")
    lhs = H.tmul3(H.delta_left(J), H.leg(J, (0, 1)))
    rhs = H.tmul3(H.delta_right(J), H.leg(J, (1, 2)))
    d = vsub(lhs, rhs)
    rep.check("(Δ⊗Id)(J)(J⊗1) = (Id⊗Δ)(J)(1⊗J)", not d, min(d) if d else None)
    left: dict = {}
    right: dict = {}
    for (i, j), c in J.items():
        if H.counit[i]:
            vacc(left, j, c * H.counit[i])
        if H.counit[j]:
            vacc(right, i, c * H.counit[j])
    rep.check("(ε⊗Id)(J) = 1", not vsub(left, H.one()))
    rep.check("(Id⊗ε)(J) = 1", not vsub(right, H.one()))
    if H.parity:
        rep.check("J even", all((H.p(i) + H.p(j)) % 2 == 0 for i, j in J))
    return rep


class Twist:
    """A certified twist with its cached inverse."""

    def __init__(self, host: HopfPresentation, J: dict, inverse: dict, report: Report | None = None):
        self.host = host
        self.J = J
        self.inverse = inverse
        self.report = report

    @property
    def element(self) -> TensorSquareElement:
        return TensorSquareElement(self.host, self.J)

    def to_json(self) -> dict:
        return TensorSquareElement(self.host, self.J).to_json()


def twist_report(H: HopfPresentation, J) -> tuple[Report, dict | None]:
    J = _coeffs(J)
    rep = quasitwist_report(H, J)
    try:
        inv = tensor_inv_raw(H, J)
        rep.check("J invertible", True)
    except ZeroDivisionError:
        inv = None
        rep.check("J invertible", False, "minimal polynomial has zero constant term")
    return rep, inv


def verify_twist(H: HopfPresentation, J) -> Twist:
    """Certify J; raises TwistError with kind 'not a quasitwist' or 'singular quasitwist'."""
    rep, inv = twist_report(H, J)
    if not all(c.ok for c in rep.checks if c.axiom != "J invertible"):
        raise TwistError("not a quasitwist", rep)
    if inv is None:
        raise TwistError("singular quasitwist", rep)
    return Twist(H, _coeffs(J), inv, rep)


def gauge(T: Twist, x: dict) -> Twist:
    """J^x = Δ(x) J (x⁻¹⊗x⁻¹)."""
    H = T.host
    if H.eps(x) != 1:
        raise ValueError("gauge element must have ε(x) = 1")
    xi = H.algebra.inverse(x)
    xx = {(a, b): p * q for a, p in xi.items() for b, q in xi.items()}
    Jx = H.tmul(H.tmul(H.delta(x), T.J), xx)
    # the inverse is known: (x⊗x) J⁻¹ Δ(x⁻¹); certify it instead of solving for it
    x2 = {(a, b): p * q for a, p in x.items() for b, q in x.items()}
    inv = H.tmul(H.tmul(x2, T.inverse), H.delta(xi))
    rep = quasitwist_report(H, Jx)
    one = H.one2()
    rep.check("J invertible", not vsub(H.tmul(Jx, inv), one) and not vsub(H.tmul(inv, Jx), one))
    if not rep.ok:
        raise TwistError("not a quasitwist", rep)
    return Twist(H, Jx, inv, rep)


def twist_hopf(H: HopfPresentation, T: Twist, verify: bool = True) -> HopfPresentation:
    """Δ^J(a) = J⁻¹Δ(a)J and S^J(a) = Q⁻¹S(a)Q with Q = m(S⊗Id)(J)."""
    J, Ji = T.J, T.inverse
    F = H.F
    comult = [H.tmul(H.tmul(Ji, d), J) for d in H.comult]
    Q: dict = {}
    for (i, j), c in J.items():
        vaxpy(Q, H.mul(H.antipode[i], {j: F.one}), c)
    Qi = H.algebra.inverse(Q)
    antipode = [H.mul(H.mul(Qi, s), Q) for s in H.antipode]
    out = HopfPresentation(H.algebra, comult, H.counit, antipode, parity=H.parity,
                           name=f"{H.name} twisted" if H.name else "twisted")
    if verify:
        rep = verify_hopf(out)
        if not rep.ok:
            raise AssertionError(f"twisted presentation fails: {[c.axiom for c in rep.failures()]}")
    return out


def twist_r(T: Twist, R=None) -> TensorSquareElement:
    """R^J = J21⁻¹ R J; R defaults to 1⊗1."""
    H = T.host
    R = H.one2() if R is None else _coeffs(R)
    return TensorSquareElement(H, H.tmul(H.tmul(H.flip(T.inverse), R), T.J))


def inverse_twist(T: Twist, HJ: HopfPresentation) -> Twist:
    """J⁻¹ as a twist of A^J; twisting A^J by it recovers A."""
    return verify_twist(HJ, T.inverse)


def conjugation_iso_report(HJ: HopfPresentation, RJ, HJx: HopfPresentation, RJx, x: dict) -> Report:
    """a ↦ x a x⁻¹ from (A^J, R^J) to (A^{J^x}, R^{J^x})."""
    F = HJ.F
    xi = HJ.algebra.inverse(x)
    f = [HJ.mul(HJ.mul(x, {i: F.one}), xi) for i in range(HJ.dim)]
    rep = check_hopf_map(f, HJ, HJx, "conjugation by x")
    img: dict = {}
    for (i, j), c in _coeffs(RJ).items():
        for a, p in f[i].items():
            for b, q in f[j].items():
                vacc(img, (a, b), c * p * q)
    rep.check("(f⊗f)(R^J) = R^{J^x}", not vsub(img, _coeffs(RJx)))
    return rep


# ---------------------------------------------------------------- abelian twists

def character_idempotents(A: FiniteGroup, F: CyclotomicField, chars: list[Character]) -> list[dict]:
    """E_χ = |A|⁻¹ Σ_g χ(g⁻¹) g, so that g E_χ = χ(g) E_χ and ψ(E_χ) = [ψ = χ]."""
    inv = F(1) / F(A.order)
    return [{g: chi.value(A.inverse[g], F) * inv for g in A.elements} for chi in chars]


def abelian_twist(H: HopfPresentation, A: FiniteGroup, c: TwoCocycle, chars: list[Character]) -> Twist:
    """J = Σ c(χ,ψ) E_χ⊗E_ψ on k[A]; c is indexed by positions in `chars`."""
    F = H.F
    if c.values[0][0] != 1:
        raise ValueError("cocycle must satisfy c(0,0) = 1")
    E = character_idempotents(A, F, chars)
    J: dict = {}
    n = len(chars)
    for a in range(n):
        for b in range(n):
            v = c.values[a][b]
            for g, x in E[a].items():
                for h, y in E[b].items():
                    vacc(J, (g, h), v * x * y)
    T = verify_twist(H, J)
    for a in range(n):
        for b in range(n):
            val = sum((v * chars[a].value(g, F) * chars[b].value(h, F) for (g, h), v in J.items()), F.zero)
            if val != c.values[a][b]:
                raise ArithmeticError("(χ⊗ψ)(J) does not recover c")
    return T


# ---------------------------------------------------------------- G-coalgebras

class GCoalgebra:
    """Coalgebra with a left G-action; action[g][i] is the vector g·e_i."""

    def __init__(self, G: FiniteGroup, F: CyclotomicField, comult: list[dict], counit: list,
                 action: list[list[dict]], name: str = ""):
        self.G = G
        self.F = F
        self.dim = len(comult)
        self.comult = comult
        self.counit = [F.coerce(c) for c in counit]
        self.action = action
        self.name = name

    def delta(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            for k, x in self.comult[i].items():
                vacc(out, k, c * x)
        return out

    def eps(self, v: dict):
        return sum((c * self.counit[i] for i, c in v.items()), self.F.zero)

    def act(self, g: int, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            vaxpy(out, self.action[g][i], c)
        return out

    def dual_algebra(self) -> StructureAlgebra:
        n = self.dim
        table = [[{} for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for (i, j), c in self.comult[k].items():
                table[i][j][k] = c
        return StructureAlgebra(self.F, table, {i: c for i, c in enumerate(self.counit) if c})


def verify_gcoalgebra(C: GCoalgebra) -> Report:
    rep = Report(C.name or "G-coalgebra")
    wit = None
    for i in range(C.dim):
        left: dict = {}
        right: dict = {}
        for (a, b), c in C.comult[i].items():
            for (p, q), x in C.comult[a].items():
                vacc(left, (p, q, b), c * x)
            for (p, q), x in C.comult[b].items():
                vacc(right, (a, p, q), c * x)
        if vsub(left, right):
            wit = i
            break
    rep.check("coassociativity", wit is None, wit)
    wit = None
    for i in range(C.dim):
        left: dict = {}
        right: dict = {}
        for (a, b), c in C.comult[i].items():
            if C.counit[a]:
                vacc(left, b, c * C.counit[a])
            if C.counit[b]:
                vacc(right, a, c * C.counit[b])
        if vsub(left, {i: C.F.one}) or vsub(right, {i: C.F.one}):
            wit = i
            break
    rep.check("counit law", wit is None, wit)
    G = C.G
    wit = None
    for g in G.elements:
        for h in G.elements:
            for i in range(C.dim):
                if vsub(C.act(g, C.action[h][i]), C.action[G.mul(g, h)][i]):
                    wit = ("action", g, h, i)
                    break
            if wit:
                break
        if wit:
            break
    rep.check("G acts", wit is None, wit)
    wit = None
    for g in G.elements:
        for i in range(C.dim):
            gi = C.action[g][i]
            img: dict = {}
            for (a, b), c in C.comult[i].items():
                for p, x in C.action[g][a].items():
                    for q, y in C.action[g][b].items():
                        vacc(img, (p, q), c * x * y)
            if vsub(C.delta(gi), img) or C.eps(gi) != C.counit[i]:
                wit = (g, i)
                break
        if wit:
            break
    rep.check("Δ and ε are G-equivariant", wit is None, wit)
    return rep


def movshev_coalgebra(G: FiniteGroup, F: CyclotomicField, J) -> GCoalgebra:
    """(k[G], Δ_J) with Δ_J(a) = Δ(a)J, G acting by left multiplication."""
    J = _coeffs(J)
    comult = []
    for x in G.elements:
        d: dict = {}
        for (a, b), c in J.items():
            vacc(d, (G.mul(x, a), G.mul(x, b)), c)
        comult.append(d)
    action = [[{G.mul(g, i): F.one} for i in G.elements] for g in G.elements]
    return GCoalgebra(G, F, comult, [F.one] * G.order, action, "A_J")


def movshev_dual_algebra(G: FiniteGroup, F: CyclotomicField, J) -> StructureAlgebra:
    """(A_J)*: δ_x δ_y = Σ_z J(z⁻¹x, z⁻¹y) δ_z; asserts that the radical vanishes."""
    C = movshev_coalgebra(G, F, J)
    rep = verify_gcoalgebra(C)
    if not rep.ok:
        raise ValueError(f"J is not a quasitwist: {[c.axiom for c in rep.failures()]}")
    B = C.dual_algebra()
    if jacobson_radical(B):
        raise ArithmeticError("(A_J)* has nonzero radical")
    return B


class StabilizerData:
    def __init__(self, subgroup: Subgroup, blocks: list[dict], block_sizes: list[int], report: Report):
        self.subgroup = subgroup
        self.blocks = blocks
        self.block_sizes = block_sizes
        self.report = report


def movshev_stabilizer(G: FiniteGroup, F: CyclotomicField, J) -> StabilizerData:
    """Stabilizer of the block of (A_J)* through the identity, with the block-shape checks."""
    B = movshev_dual_algebra(G, F, J)
    blocks = central_idempotents(B)
    chosen = next(e for e in blocks if e.get(0))

    def rho(g: int, v: dict) -> dict:
        return {G.mul(g, y): c for y, c in v.items()}

    St = [g for g in G.elements if not vsub(rho(g, chosen), chosen)]
    sub = Subgroup(G, St)
    sizes = []
    for e in blocks:
        d2 = B.trace(e)
        d = _isqrt(d2)
        sizes.append(d)
    rep = Report("stabilizer")
    root = _isqrt_int(len(St))
    rep.check("|St| is a square", root is not None, len(St))
    rep.check("every block has size |St|^(1/2)", root is not None and all(s == root for s in sizes), sizes)
    rep.check("number of blocks is |G/St|", len(blocks) * len(St) == G.order, len(blocks))
    orbit_ok = all(any(not vsub(rho(g, chosen), e) for g in G.elements) for e in blocks)
    rep.check("G permutes the blocks transitively", orbit_ok)
    return StabilizerData(sub, blocks, sizes, rep)


def _isqrt_int(n: int):
    r = int(round(n ** 0.5))
    return r if r * r == n else None


def _isqrt(d2) -> int | None:
    if not d2.is_integer():
        return None
    return _isqrt_int(int(d2.to_fraction()))


class Extraction:
    def __init__(self, J: dict, lam: dict, iso: list[dict], report: Report):
        self.J = J
        self.lam = lam
        self.iso = iso
        self.report = report


def _lambda_candidates(n: int):
    for i in range(n):
        yield {i: 1}
    for bits in itertools.product((0, 1), repeat=n):
        if sum(bits) >= 2:
            yield {i: 1 for i, b in enumerate(bits) if b}


def extract_quasitwist(C: GCoalgebra, budget: int = 100000) -> Extraction:
    """Find λ with ε(λ)=1 and {g·λ} a basis; J = Σ γ(a,b) a⊗b where Δ̃(λ) = Σ γ(a,b) aλ⊗bλ."""
    G, F = C.G, C.F
    n = C.dim
    if n != G.order:
        raise ValueError("C is not the size of the regular representation")
    for t, cand in enumerate(_lambda_candidates(n)):
        if t >= budget:
            break
        v = {i: F(c) for i, c in cand.items()}
        e = C.eps(v)
        if not e:
            continue
        lam = vscale(v, e.inv())
        orbit = [C.act(g, lam) for g in G.elements]
        P = [[orbit[g].get(i, F.zero) for g in G.elements] for i in range(n)]
        if mat_rank(P, F) < n:
            continue
        Pi = mat_inverse(P, F)
        dl = C.delta(lam)
        J: dict = {}
        for (i, j), c in dl.items():
            for a in range(n):
                pa = Pi[a][i]
                if not pa:
                    continue
                for b in range(n):
                    pb = Pi[b][j]
                    if pb:
                        vacc(J, (a, b), c * pa * pb)
        rep = gcoalgebra_iso_report(orbit, movshev_coalgebra(G, F, J), C)
        if not rep.ok:
            raise ArithmeticError("extracted quasitwist does not give an isomorphic G-coalgebra")
        rep.info["candidate_index"] = t
        return Extraction(J, lam, orbit, rep)
    raise ValueError("no cyclic vector found within budget; C may not be the regular representation")


def gcoalgebra_iso_report(f: list[dict], C1: GCoalgebra, C2: GCoalgebra) -> Report:
    """f[i] is the image of basis vector i of C1; checks a G-coalgebra isomorphism."""
    F = C1.F
    rep = Report("G-coalgebra isomorphism")

    def app(v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            vaxpy(out, f[i], c)
        return out

    wit = None
    for i in range(C1.dim):
        img: dict = {}
        for (a, b), c in C1.comult[i].items():
            for p, x in f[a].items():
                for q, y in f[b].items():
                    vacc(img, (p, q), c * x * y)
        if vsub(C2.delta(f[i]), img):
            wit = i
            break
    rep.check("Δ preserved", wit is None, wit)
    wit = next((i for i in range(C1.dim) if C2.eps(f[i]) != C1.counit[i]), None)
    rep.check("ε preserved", wit is None, wit)
    wit = next(((g, i) for g in C1.G.elements for i in range(C1.dim)
                if vsub(app(C1.action[g][i]), C2.act(g, f[i]))), None)
    rep.check("G-equivariant", wit is None, wit)
    rep.check("bijective", Span(F, f).dim == C1.dim == C2.dim)
    return rep


def twisted_group_dual_coalgebra(H: FiniteGroup, F: CyclotomicField, c: TwoCocycle) -> GCoalgebra:
    """(k[H]^c)* with H acting by the dual of conjugation X_a X_g X_a⁻¹."""
    n = H.order
    cv = c.values
    comult = [dict() for _ in range(n)]
    for a in H.elements:
        for b in H.elements:
            vacc(comult[H.mul(a, b)], (a, b), F.coerce(cv[a][b]))
    counit = [F.one if g == 0 else F.zero for g in H.elements]
    # (a·φ)(X) = φ(a⁻¹·X), so a·X_g* = κ(a⁻¹, h) X_h* with h = a g a⁻¹
    action = []
    for a in H.elements:
        ai = H.inverse[a]
        row = []
        for g in H.elements:
            h = H.conj(a, g)
            row.append({h: _conj_coeff(H, F, cv, ai, h)})
        action.append(row)
    return GCoalgebra(H, F, comult, counit, action, "dual of twisted group algebra")


def _conj_coeff(H, F, cv, a, h):
    """κ(a, h) with X_a X_h X_a⁻¹ = κ(a, h) X_{a h a⁻¹}; note X_a⁻¹ = X_{a⁻¹}/c(a, a⁻¹)."""
    ai = H.inverse[a]
    ah = H.mul(a, h)
    return F.coerce(cv[a][h]) * F.coerce(cv[ah][ai]) / F.coerce(cv[a][ai])


# ---------------------------------------------------------------- gauge search

class GaugeResult:
    def __init__(self, status: str, x: dict | None, tried: int):
        self.status = status
        self.x = x
        self.tried = tried

    def to_json(self) -> dict:
        return {"status": self.status, "tried": self.tried,
                "x": {str(k): v.to_json() for k, v in self.x.items()} if self.x else None}


def _gauge_test(H: HopfPresentation, J: dict, Jp: dict, x: dict) -> bool:
    """Δ(x) J = J′ (x⊗x), i.e. J′ = J^x when x is invertible."""
    xx = {(a, b): p * q for a, p in x.items() for b, q in x.items()}
    return not vsub(H.tmul(H.delta(x), J), H.tmul(Jp, xx))


def abelian_gauge(H: HopfPresentation, A: FiniteGroup, J, Jp) -> dict | None:
    """Exact gauge solver on k[A], A abelian.

    With x = Σ t_χ E_χ the condition J′ = J^x reads t_{χψ} = (c′/c)(χ,ψ) t_χ t_ψ,
    where c(χ,ψ) = (χ⊗ψ)(J). Values on generators of the dual group are roots
    of t^n = const; every combination of roots in the field is tried.
    """
    from .group import dual_group
    from .linalg import roots_in_field
    J, Jp = _coeffs(J), _coeffs(Jp)
    F = H.F
    D, chars = dual_group(A)
    vals = [ch.values(F) for ch in chars]

    def pair(X, a, b):
        return sum((v * vals[a][g] * vals[b][h] for (g, h), v in X.items()), F.zero)

    n = D.order
    c = [[pair(J, a, b) for b in range(n)] for a in range(n)]
    cp = [[pair(Jp, a, b) for b in range(n)] for a in range(n)]
    if any(not x for row in c for x in row) or any(not x for row in cp for x in row):
        return None
    r = [[cp[a][b] / c[a][b] for b in range(n)] for a in range(n)]
    gens = D.generators()
    options = []
    for g in gens:
        m = D.element_order(g)
        P, y = F.one, g
        for _ in range(m - 1):
            P = P * r[y][g]
            y = D.mul(y, g)
        options.append(roots_in_field([-(P.inv())] + [F.zero] * (m - 1) + [F.one], F))
    for choice in itertools.product(*options):
        t = {0: F.one}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for g, tg in zip(gens, choice):
                    b = D.mul(a, g)
                    if b not in t:
                        t[b] = r[a][g] * t[a] * tg
                        new.append(b)
            frontier = new
        if any(t[D.mul(a, b)] != r[a][b] * t[a] * t[b] for a in range(n) for b in range(n)):
            continue
        E = character_idempotents(A, F, chars)
        x: dict = {}
        for a in range(n):
            vaxpy(x, E[a], t[a])
        if _gauge_test(H, J, Jp, x):
            return x
    return None


def find_gauge(H: HopfPresentation, J, Jp, budget: int = 20000,
               group: FiniteGroup | None = None) -> GaugeResult:
    """Best-effort search for x with Δ(x) J (x⁻¹⊗x⁻¹) = J′; 'inconclusive' when the budget runs out.

    Grouplike candidates come first, then the exact abelian solver when `group` is
    abelian, then 0/1-supported elements scaled to ε(x) = 1.
    """
    J, Jp = _coeffs(J), _coeffs(Jp)
    F = H.F
    n = H.dim
    tried = 0

    def test(x: dict) -> bool:
        return _gauge_test(H, J, Jp, x)

    for i in range(n):
        tried += 1
        x = {i: F.one}
        if H.eps(x) == 1 and test(x):
            return GaugeResult("found", x, tried)
    if group is not None and group.is_abelian():
        tried += 1
        x = abelian_gauge(H, group, J, Jp)
        if x is not None:
            return GaugeResult("found", x, tried)
    for bits in itertools.product((0, 1), repeat=n):
        if sum(bits) < 2:
            continue
        if tried >= budget:
            return GaugeResult("inconclusive", None, tried)
        tried += 1
        v = {i: F.one for i, b in enumerate(bits) if b}
        e = H.eps(v)
        if not e:
            continue
        x = vscale(v, e.inv())
        if not test(x):
            continue
        try:
            H.algebra.inverse(x)
        except (ValueError, ZeroDivisionError, ArithmeticError):
            continue
        return GaugeResult("found", x, tried)
    return GaugeResult("inconclusive", None, tried)
