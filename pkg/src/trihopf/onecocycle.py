"""Minimal twists from bijective 1-cocycles π : G → A with A abelian.

Notation. A∨ is the character group of A; the pairing (x, y*) is the character
value y*(x). The doubled group is G̃ = G ⋉ A∨ with G acting on characters by
(g·χ)(a) = χ(g⁻¹·a). In the index layout of `semidirect_product`, (g, c) stands
for the product g·c, so the element written a*g is (g, g⁻¹·a*).
"""
from __future__ import annotations

from .algebra import AlgebraRepresentation, StructureAlgebra
from .group import (Character, FiniteGroup, abelian_group, cyclic_group, dual_group,
                    perm_sign, semidirect_product, symmetric_group, verify_action)
from .hopf import HopfPresentation, TensorSquareElement, group_algebra
from .linalg import mat_det, vacc, vsub
from .report import Report
from .rmatrix import drinfeld_element, is_triangular, minimal_part, triangular_report
from .scalar import CyclotomicField, field
from .twist import Twist, movshev_dual_algebra, twist_hopf, twist_r, verify_twist


class CocycleDatum:
    """(G, A, ρ, π): action[g][a] = g·a, pi[g] ∈ A."""

    def __init__(self, G: FiniteGroup, A: FiniteGroup, action, pi, name: str = ""):
        self.G = G
        self.A = A
        self.action = [tuple(p) for p in action]
        self.pi = list(pi)
        self.name = name

    def pi_inv(self) -> list[int]:
        inv = [None] * self.A.order
        for g, a in enumerate(self.pi):
            inv[a] = g
        return inv

    def conductor(self) -> int:
        return self.A.exponent()


def verify_cocycle(d: CocycleDatum) -> Report:
    G, A = d.G, d.A
    rep = Report(d.name or "1-cocycle")
    try:
        verify_action(G, A, d.action)
        rep.check("ρ is an action by automorphisms", True)
    except Exception as e:  # GroupAxiomError carries the witness
        rep.check("ρ is an action by automorphisms", False, getattr(e, "witness", str(e)))
        return rep
    rep.check("A abelian", A.is_abelian())
    rep.check("|G| = |A|", G.order == A.order, (G.order, A.order))
    rep.check("π bijective", sorted(d.pi) == list(A.elements))
    wit = next(((g, h) for g in G.elements for h in G.elements
                if d.pi[G.mul(g, h)] != A.mul(d.pi[g], d.action[g][d.pi[h]])), None)
    rep.check("π(gg') = π(g)(g·π(g'))", wit is None, wit)
    return rep


class DoubledDatum:
    """G̃ = G⋉A∨, Ã = A×A∨ and π̃(a*g) = π(g)a*."""

    def __init__(self, d: CocycleDatum):
        G, A = d.G, d.A
        self.base = d
        self.D, self.chars = dual_group(A)
        D, chars = self.D, self.chars
        pos = {c.exps: i for i, c in enumerate(chars)}
        # (g·χ)(a) = χ(g⁻¹·a)
        self.dual_action = [tuple(pos[tuple(chars[c].exps[d.action[G.inverse[g]][a]] for a in A.elements)]
                                  for c in D.elements) for g in G.elements]
        self.Gt = semidirect_product(G, D, self.dual_action)
        self.nD = D.order

    def element(self, astar: int, g: int) -> int:
        """Index of a*g in G̃."""
        G = self.base.G
        return g * self.nD + self.dual_action[G.inverse[g]][astar]

    def g_part(self, h: int) -> int:
        return h // self.nD

    def astar_part(self, h: int) -> int:
        """a* with h = a*g."""
        g = h // self.nD
        return self.dual_action[g][h % self.nD]

    def pi_tilde(self, h: int) -> tuple[int, int]:
        return self.base.pi[self.g_part(h)], self.astar_part(h)

    def act_tilde(self, h: int, pair: tuple[int, int]) -> tuple[int, int]:
        g = self.g_part(h)
        return self.base.action[g][pair[0]], self.dual_action[g][pair[1]]

    def verify(self) -> Report:
        d = self.base
        A, D, Gt = d.A, self.D, self.Gt
        rep = Report("doubled datum")
        images = {self.pi_tilde(h) for h in Gt.elements}
        rep.check("π̃ bijective", len(images) == Gt.order == A.order * D.order)
        wit = None
        for h in Gt.elements:
            for k in Gt.elements:
                lhs = self.pi_tilde(Gt.mul(h, k))
                a, b = self.pi_tilde(h)
                c, e = self.act_tilde(h, self.pi_tilde(k))
                if lhs != (A.mul(a, c), D.mul(b, e)):
                    wit = (h, k)
                    break
            if wit:
                break
        rep.check("π̃ is a 1-cocycle", wit is None, wit)
        return rep


def double(d: CocycleDatum) -> DoubledDatum:
    rep = verify_cocycle(d)
    if not rep.ok:
        raise ValueError(f"not a bijective 1-cocycle: {[c.to_json() for c in rep.failures()]}")
    dd = DoubledDatum(d)
    rep = dd.verify()
    if not rep.ok:
        raise ArithmeticError(f"doubled datum fails: {[c.axiom for c in rep.failures()]}")
    return dd


def tmap(d: CocycleDatum) -> list[int]:
    """T(x) with π⁻¹(x⁻¹) π⁻¹(T(x)) = 1, i.e. T(x) = π(π⁻¹(x⁻¹)⁻¹)."""
    G, A = d.G, d.A
    pinv = d.pi_inv()
    T = [d.pi[G.inverse[pinv[A.inverse[x]]]] for x in A.elements]
    for x in A.elements:
        if G.mul(pinv[A.inverse[x]], pinv[T[x]]) != 0:
            raise ArithmeticError("T-map identity fails")
    if sorted(T) != list(A.elements):
        raise ArithmeticError("T is not a bijection")
    return T


class CocycleTwist:
    """Everything built from a datum: k[G̃], J̄ and its closed-form inverse, R^J̄."""

    def __init__(self, dd: DoubledDatum, F: CyclotomicField, H: HopfPresentation, twist: Twist,
                 closed_inverse: dict, T: list[int]):
        self.doubled = dd
        self.F = F
        self.group_hopf = H
        self.twist = twist
        self.closed_inverse = closed_inverse
        self.T = T


def _pair(ch: Character, x: int, F: CyclotomicField):
    return ch.value(x, F)


def jbar(d: CocycleDatum, F: CyclotomicField | None = None) -> CocycleTwist:
    """J̄ = |A|⁻¹ Σ y*(x) π⁻¹(x)⊗y*, certified, with its inverse compared to the T-map form."""
    dd = double(d)
    F = F or field(d.conductor())
    A, D = d.A, dd.D
    H = group_algebra(dd.Gt, F, verify=False)
    H.name = f"k[G̃] {d.name}".strip()
    pinv = d.pi_inv()
    n = F(1) / F(A.order)
    J: dict = {}
    Jinv: dict = {}
    T = tmap(d)
    for x in A.elements:
        gx = dd.element(0, pinv[x])
        gT = dd.element(0, pinv[T[x]])
        for y in D.elements:
            v = _pair(dd.chars[y], x, F)
            ys = dd.element(y, 0)
            vacc(J, (gx, ys), v * n)
            vacc(Jinv, (gT, ys), v.inv() * n)
    tw = verify_twist(H, J)
    if vsub(tw.inverse, Jinv):
        raise ArithmeticError("solved inverse of J̄ differs from the closed form")
    return CocycleTwist(dd, F, H, tw, Jinv, T)


def closed_form_r(ct: CocycleTwist) -> dict:
    """|A|⁻² Σ y*(x)/x*(y) · x*π⁻¹(x) ⊗ π⁻¹(T(y))y*."""
    dd, F = ct.doubled, ct.F
    d = dd.base
    A, D, Gt = d.A, dd.D, dd.Gt
    pinv = d.pi_inv()
    n2 = F(1) / F(A.order * A.order)
    R: dict = {}
    for x in A.elements:
        px = dd.element(0, pinv[x])
        for y in A.elements:
            pty = dd.element(0, pinv[ct.T[y]])
            for xs in D.elements:
                left = Gt.mul(dd.element(xs, 0), px)
                for ys in D.elements:
                    right = Gt.mul(pty, dd.element(ys, 0))
                    v = _pair(dd.chars[ys], x, F) / _pair(dd.chars[xs], y, F)
                    vacc(R, (left, right), v * n2)
    return R


class CocycleTriangular:
    def __init__(self, ct: CocycleTwist, hopf: HopfPresentation, R: TensorSquareElement, report: Report):
        self.cocycle_twist = ct
        self.hopf = hopf
        self.R = R
        self.report = report


def rmatrix_from_cocycle(d: CocycleDatum, F: CyclotomicField | None = None) -> CocycleTriangular:
    ct = jbar(d, F)
    HJ = twist_hopf(ct.group_hopf, ct.twist, verify=False)
    HJ.name = f"k[G̃]^J̄ {d.name}".strip()
    R = twist_r(ct.twist)
    rep = triangular_report(HJ, R, f"minimal triangular {d.name}".strip())
    rep.check("closed-form J̄⁻¹ equals solved inverse", True)
    rep.check("closed-form R equals J̄21⁻¹J̄", not vsub(closed_form_r(ct), R.coeffs))
    rep.check("rank = |G̃|", rep.info["rank"] == HJ.dim, rep.info["rank"])
    rep.check("Drinfeld element = 1", rep.info["drinfeld_is_one"])
    n, z = HJ.dim, ct.F.zero
    M = [[R.coeffs.get((i, j), z) for j in range(n)] for i in range(n)]
    rep.check("coefficient matrix of R invertible", bool(mat_det(M, ct.F)))
    return CocycleTriangular(ct, HJ, R, rep)


# ---------------------------------------------------------------- projective representation

class ProjectiveRepData:
    def __init__(self, algebra: StructureAlgebra, rep: AlgebraRepresentation, report: Report):
        self.algebra = algebra
        self.representation = rep
        self.report = report


def projective_rep(d: CocycleDatum, F: CyclotomicField | None = None) -> ProjectiveRepData:
    """V = Fun(A) with Z_{bg} δ_a = b(a) δ_{π(g)}; checks (k[H]_J)* ≅ End(V) for J = |A|⁻¹Σ b(π(g)) b⊗g."""
    dd = double(d)
    F = F or field(d.conductor())
    G, A, D, Hg = d.G, d.A, dd.D, dd.Gt
    nA = A.order
    inv_n = F(1) / F(nA)
    J: dict = {}
    for g in G.elements:
        for b in D.elements:
            vacc(J, (dd.element(b, 0), dd.element(0, g)), _pair(dd.chars[b], d.pi[g], F) * inv_n)
    rep = Report(f"projective representation {d.name}".strip())
    Hk = group_algebra(Hg, F, verify=False)
    try:
        verify_twist(Hk, J)
        rep.check("J is a twist for k[H]", True)
    except Exception as e:
        rep.check("J is a twist for k[H]", False, str(e))
    B = movshev_dual_algebra(Hg, F, J)   # basis Y_h dual to h ∈ H
    # Z_{bg} = |A| b(π(g)) Y_{bg}; the factor |A| absorbs the normalization of Δ_J
    scale = {}
    nF = F(nA)
    for g in G.elements:
        for b in D.elements:
            scale[dd.element(b, g)] = nF * _pair(dd.chars[b], d.pi[g], F)
    wit = None
    for g1 in G.elements:
        for b1 in D.elements:
            h1 = dd.element(b1, g1)
            for g2 in G.elements:
                for b2 in D.elements:
                    h2 = dd.element(b2, g2)
                    prod: dict = {}
                    for k, c in B.table[h2][h1].items():
                        vacc(prod, k, c * scale[h2] * scale[h1] / scale[k])
                    expect = {dd.element(b1, g2): _pair(dd.chars[b2], d.pi[g1], F)}
                    if vsub(prod, expect):
                        wit = (h2, h1)
                        break
                if wit:
                    break
            if wit:
                break
        if wit:
            break
    rep.check("Z_{b2g2} * Z_{b1g1} = b2(π(g1)) Z_{b1g2}", wit is None, wit)
    # action on V in the Y basis: Y_h = Z_h / scale[h]
    action = []
    for h in Hg.elements:
        g = dd.g_part(h)
        b = dd.astar_part(h)
        M = [[F.zero] * nA for _ in range(nA)]
        s = scale[h].inv()
        for a in A.elements:
            M[d.pi[g]][a] = _pair(dd.chars[b], a, F) * s
        action.append(M)
    V = AlgebraRepresentation(B, action)
    vr = V.verify()
    rep.extend(vr, "action: ")
    from .linalg import Span
    span = Span(F, [{(i, j): M[i][j] for i in range(nA) for j in range(nA) if M[i][j]} for M in action])
    rep.check("(k[H]_J)* → End(V) is bijective", span.dim == nA * nA == Hg.order, span.dim)
    rep.check("H-equivariant", _equivariance(dd, F, action) is None, _equivariance(dd, F, action))
    rep.info["dim_V"] = nA
    return ProjectiveRepData(B, V, rep)


def _phi(dd: DoubledDatum, F: CyclotomicField, h: int) -> list:
    """φ(bg) = φ(b)φ(g), φ(b)δ_a = b(a)⁻¹δ_a, φ(g)δ_a = δ_{(g·a)π(g)}."""
    d = dd.base
    A = d.A
    g = dd.g_part(h)
    b = dd.astar_part(h)
    n = A.order
    M = [[F.zero] * n for _ in range(n)]
    for a in A.elements:
        t = A.mul(d.action[g][a], d.pi[g])
        M[t][a] = _pair(dd.chars[b], t, F).inv()
    return M


def _equivariance(dd: DoubledDatum, F: CyclotomicField, action: list):
    """Φ(h·Y_k) = φ(h)Φ(Y_k)φ(h)⁻¹ with h·Y_k = Y_{hk}."""
    from .linalg import mat_inverse, mat_mul
    Hg = dd.Gt
    for h in Hg.elements:
        P = _phi(dd, F, h)
        Pi = mat_inverse(P, F)
        for k in Hg.elements:
            lhs = action[Hg.mul(h, k)]
            rhs = mat_mul(mat_mul(P, action[k], F), Pi, F)
            if lhs != rhs:
                return (h, k)
    return None


# ---------------------------------------------------------------- gallery data

def trivial_datum() -> CocycleDatum:
    G = cyclic_group(1)
    return CocycleDatum(G, G, [(0,)], [0], "trivial")


def identity_datum(n: int) -> CocycleDatum:
    """G = A = Z/n, trivial action, π = id."""
    G = cyclic_group(n)
    return CocycleDatum(G, G, [tuple(range(n))] * n, list(range(n)), f"identity Z{n}")


def dim16_datum() -> CocycleDatum:
    """G = Z2×Z2 = <x,y>, A = Z4 = <a>; x acts trivially, y inverts; π(x)=a², π(y)=a, π(xy)=a³."""
    G = abelian_group(2, 2)      # index 2*i + j for x^i y^j
    A = cyclic_group(4)
    action = []
    for g in G.elements:
        j = g % 2
        action.append(tuple((-a) % 4 if j else a for a in A.elements))
    pi = {0: 0, 2: 2, 1: 1, 3: 3}   # 1, x, y, xy
    return CocycleDatum(G, A, action, [pi[g] for g in G.elements], "dim16")


def dim36_datum() -> CocycleDatum:
    """G = S3, A = Z2×Z3, s(a,b) = (a, sign(s) b); π = (parity, π2)."""
    G, perms = symmetric_group(3)
    A = abelian_group(2, 3)      # index 3*a + b
    action = []
    for p in perms:
        s = perm_sign(p)
        action.append(tuple(3 * (x // 3) + (s * (x % 3)) % 3 for x in A.elements))
    cyc = {(0, 1, 2): 0, (1, 2, 0): 1, (2, 0, 1): 2, (1, 0, 2): 2, (2, 1, 0): 0, (0, 2, 1): 1}
    pi = [3 * (0 if perm_sign(p) == 1 else 1) + cyc[tuple(p)] for p in perms]
    return CocycleDatum(G, A, action, pi, "dim36")
