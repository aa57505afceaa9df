"""Representation theory of duals of twisted group algebras, Kaplansky and Chevalley checks,
categorical dimensions."""
from __future__ import annotations

from .algebra import (AlgebraRepresentation, StructureAlgebra, block_profile,
                      jacobson_radical, primitive_idempotent, quotient, simple_modules,
                      tensor_product_algebra)
from .group import FiniteGroup, Subgroup, abelian_group, double_cosets, semidirect_product, stabilizer_data
from .hopf import HopfPresentation, dual_hopf, group_algebra, tensor_inv_raw
from .linalg import Span, mat_identity, mat_mul, nullspace, vacc, vsub
from .report import Report
from .rmatrix import drinfeld_element, is_triangular
from .scalar import CyclotomicField, field
from .twist import Twist, twist_hopf, verify_twist


# ---------------------------------------------------------------- the p = 3 example

def symplectic_twist(p: int, F: CyclotomicField) -> tuple[FiniteGroup, dict]:
    """H = (Z/p)^2 and J = p^-2 Σ_{a,b} (a,b) a⊗b with (a,b) = ζ^{xy'−yx'}."""
    H = abelian_group(p, p)
    s = F.n // p
    c = F(1) / F(p * p)
    J = {}
    for a in H.elements:
        for b in H.elements:
            e = ((a // p) * (b % p) - (a % p) * (b // p)) % p
            J[(a, b)] = c * F.zeta(e * s)
    return H, J


def cotriangular_example(p: int = 3, det: int = -1):
    """G = Z_2 ⋉ (Z/p)^2 with the generator acting by diag(1, det), H = (Z/p)^2, J symplectic.

    Returns (G, H as a subgroup, J on G indices, F).
    """
    F = field(2 * p if p % 2 else p)
    Hg, JH = symplectic_twist(p, F)
    Q = abelian_group(2)
    flip = tuple(((a // p) * p + (det * (a % p)) % p) for a in Hg.elements)
    G = semidirect_product(Q, Hg, {1: flip})
    # (q, a) has index q*|H| + a, so H sits on indices 0..|H|-1
    H = Subgroup(G, list(range(Hg.order)))
    return G, H, dict(JH), F


def _local_twist(G: FiniteGroup, H: Subgroup, J: dict) -> dict:
    return {(H.local(a), H.local(b)): c for (a, b), c in J.items()}


def _left_right_duals(Hg: FiniteGroup, F: CyclotomicField, J: dict):
    """(A1)* from Δ_J(a) = Δ(a)J and (A2)* from _JΔ(a) = J^-1 Δ(a), on the δ-basis of k[H]."""
    K = group_algebra(Hg, F, verify=False)
    Jinv = tensor_inv_raw(K, J)
    n = Hg.order
    t1 = [[{} for _ in range(n)] for _ in range(n)]
    t2 = [[{} for _ in range(n)] for _ in range(n)]
    for z in Hg.elements:
        for (x, y), c in K.tmul({(z, z): F.one}, J).items():
            vacc(t1[x][y], z, c)
        for (x, y), c in K.tmul(Jinv, {(z, z): F.one}).items():
            vacc(t2[x][y], z, c)
    unit = {z: F.one for z in Hg.elements}
    return StructureAlgebra(F, t1, unit), StructureAlgebra(F, t2, unit), Jinv


def _rho1(Hg: FiniteGroup, h: int):
    return [Hg.mul(h, y) for y in Hg.elements]


def _rho2(Hg: FiniteGroup, h: int):
    hi = Hg.inverse[h]
    return [Hg.mul(y, hi) for y in Hg.elements]


def _is_algebra_automorphism(A: StructureAlgebra, perm: list[int]) -> bool:
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = {perm[k]: c for k, c in A.table[i][j].items()}
            if vsub(lhs, A.table[perm[i]][perm[j]]):
                return False
    return True


class ProjectiveAction:
    """Lifts T_h ∈ GL(V) of automorphisms of a split simple algebra acting on its simple module V."""

    def __init__(self, A: StructureAlgebra, perms: list[list[int]]):
        F = A.F
        self.algebra = A
        f = primitive_idempotent(A)
        span = Span(F, [A.mul({i: F.one}, f) for i in range(A.dim)])
        basis = span.basis()
        pos = {p: t for t, p in enumerate(span.pivots())}
        n = len(basis)
        if n * n != A.dim:
            raise ValueError("algebra is not simple")
        self.n = n

        def L(i):
            M = [[F.zero] * n for _ in range(n)]
            for s, b in enumerate(basis):
                for p, c in span.coords(A.mul({i: F.one}, b)).items():
                    M[pos[p]][s] = c
            return M

        self.L = [L(i) for i in range(A.dim)]
        self.T = []
        for h, perm in enumerate(perms):
            if h == 0:
                self.T.append(mat_identity(n, F))
                continue
            # T L(a) = L(σ a) T, unknown T[r][s] at index r*n + s
            rows = []
            for i in range(A.dim):
                La, Lb = self.L[i], self.L[perm[i]]
                for r in range(n):
                    for s in range(n):
                        row: dict = {}
                        for k in range(n):
                            if La[k][s]:
                                vacc(row, r * n + k, La[k][s])
                            if Lb[r][k]:
                                vacc(row, k * n + s, -Lb[r][k])
                        if row:
                            rows.append(row)
            sol = nullspace(rows, list(range(n * n)), F)
            if len(sol) != 1:
                raise ArithmeticError(f"intertwiner space has dimension {len(sol)}")
            v = sol[0]
            self.T.append([[v.get(r * n + s, F.zero) for s in range(n)] for r in range(n)])

    def cocycle(self, G: FiniteGroup, index=lambda g: g) -> list[list]:
        """c(a,b) with T_a T_b = c(a,b) T_ab, for a, b in G (index maps into the lift list)."""
        F = self.algebra.F
        out = []
        for a in G.elements:
            row = []
            for b in G.elements:
                P = mat_mul(self.T[index(a)], self.T[index(b)], F)
                Q = self.T[index(G.mul(a, b))]
                r, s = next((r, s) for r in range(self.n) for s in range(self.n) if Q[r][s])
                c = P[r][s] / Q[r][s]
                if any(P[i][j] != c * Q[i][j] for i in range(self.n) for j in range(self.n)):
                    raise ArithmeticError("lifts are not projectively multiplicative")
                row.append(c)
            out.append(row)
        return out


def _coset_block(D: StructureAlgebra, Z: tuple) -> StructureAlgebra:
    """(A*)_Z on the δ-basis of Z; its unit is the indicator of Z."""
    pos = {z: t for t, z in enumerate(Z)}
    table = []
    for x in Z:
        row = []
        for y in Z:
            e = D.table[x][y]
            if any(k not in pos for k in e):
                raise ArithmeticError("(A*)_Z is not closed under multiplication")
            row.append({pos[k]: c for k, c in e.items()})
        table.append(row)
    return StructureAlgebra(D.F, table, {t: D.F.one for t in range(len(Z))})


class CosetBlocks:
    def __init__(self, rep: int, coset: tuple, K: Subgroup, dims: list[int], predicted: list[int],
                 reference: list[int]):
        self.representative = rep
        self.coset = coset
        self.K = K
        self.dims = dims
        self.predicted = predicted
        self.reference = reference

    def to_json(self) -> dict:
        return {"representative": self.representative, "size": len(self.coset),
                "K_order": self.K.order, "block_dims": self.dims,
                "reference_dims": self.reference, "predicted_dims": self.predicted}


class DoubleCosetBlockReport:
    def __init__(self, cosets: list[CosetBlocks], report: Report):
        self.cosets = cosets
        self.report = report

    def to_json(self) -> dict:
        return {"cosets": [c.to_json() for c in self.cosets], "report": self.report.to_json()}


def dual_double_coset_decomposition(G: FiniteGroup, H: Subgroup, J: dict,
                                    F: CyclotomicField | None = None) -> DoubleCosetBlockReport:
    """Blocks of (k[G]^J)* over double cosets HgH, against the twisted group algebra of K_g."""
    F = F or field(G.exponent())
    rep = Report("double coset decomposition of the dual")
    Hs = set(H.elements)
    rep.check("J supported in k[H]⊗k[H]", all(a in Hs and b in Hs for a, b in J))
    A = twist_hopf(group_algebra(G, F, verify=False), verify_twist(group_algebra(G, F, verify=False), J),
                   verify=False)
    D = dual_hopf(A, verify=False).algebra
    Hg = H.as_group()
    JH = _local_twist(G, H, J)
    A1, A2, _ = _left_right_duals(Hg, F, JH)
    p1 = block_profile(A1)
    p2 = block_profile(A2)
    rep.check("(A1)* simple", len(p1.dims) == 1 and p1.radical_dim == 0, p1.to_json())
    rep.check("(A2)* simple", len(p2.dims) == 1 and p2.radical_dim == 0, p2.to_json())
    rho1 = [_rho1(Hg, h) for h in Hg.elements]
    rho2 = [_rho2(Hg, h) for h in Hg.elements]
    rep.check("ρ1 acts by automorphisms", all(_is_algebra_automorphism(A1, r) for r in rho1))
    rep.check("ρ2 acts by automorphisms", all(_is_algebra_automorphism(A2, r) for r in rho2))
    V1 = ProjectiveAction(A1, rho1)
    V2 = ProjectiveAction(A2, rho2)
    total = 0
    out = []
    for Z in double_cosets(G, H):
        g = Z[0]
        K, theta1, theta2 = stabilizer_data(G, H, g)
        sub = _coset_block(D, Z)
        prof = block_profile(sub)
        total += len(Z)
        ratio = H.order // K.order
        rep.check(f"dim (A*)_Z = |H|²/|K_g| at g={g}", len(Z) == H.order ** 2 // K.order, len(Z))
        rep.check(f"(A*)_Z semisimple at g={g}", prof.radical_dim == 0)
        rep.check(f"|H|/|K_g| divides block dims at g={g}", all(d % ratio == 0 for d in prof.dims))
        Kg = K.as_group()
        c1 = V1.cocycle(Kg, lambda a: H.local(theta1[K.elements[a]]))
        c2 = V2.cocycle(Kg, lambda a: H.local(theta2[K.elements[a]]))
        cw = [[c1[a][b] * c2[a][b] for b in Kg.elements] for a in Kg.elements]
        table = [[{Kg.mul(a, b): cw[a][b]} for b in Kg.elements] for a in Kg.elements]
        ref = block_profile(StructureAlgebra(F, table, {0: cw[0][0].inv()}))
        predicted = sorted(ratio * d for d in ref.dims)
        rep.check(f"blocks = |H|/|K_g| × reference blocks at g={g}", list(prof.dims) == predicted,
                  {"blocks": list(prof.dims), "predicted": predicted})
        out.append(CosetBlocks(g, Z, K, list(prof.dims), predicted, list(ref.dims)))
    rep.check("Σ_Z dim (A*)_Z = dim A", total == G.order)
    rep.info["fine_bijection"] = "not asserted: only dimension multisets are compared"
    return DoubleCosetBlockReport(out, rep)


def fg_embedding(G: FiniteGroup, H: Subgroup, J: dict, g: int,
                 F: CyclotomicField | None = None) -> Report:
    """F_g(δ_y) = Σ_{hgh'=y} δ_h⊗δ_h' into (A2)*⊗(A1)*: multiplicative, injective, image = invariants."""
    F = F or field(G.exponent())
    rep = Report(f"F_g embedding at g={g}")
    A = twist_hopf(group_algebra(G, F, verify=False), verify_twist(group_algebra(G, F, verify=False), J),
                   verify=False)
    D = dual_hopf(A, verify=False).algebra
    Hg = H.as_group()
    n = Hg.order
    A1, A2, _ = _left_right_duals(Hg, F, _local_twist(G, H, J))
    T = tensor_product_algebra(A2, A1)
    Z = next(z for z in double_cosets(G, H) if g in z)
    Fg = {}
    for y in Z:
        v = {}
        for h in H.elements:
            for k in H.elements:
                if G.mul(G.mul(h, g), k) == y:
                    vacc(v, H.local(h) * n + H.local(k), F.one)
        Fg[y] = v

    def app(x: dict) -> dict:
        out: dict = {}
        for y, c in x.items():
            for k, d in Fg[y].items():
                vacc(out, k, c * d)
        return out

    wit = next(((x, y) for x in Z for y in Z
                if vsub(app(D.table[x][y]), T.mul(Fg[x], Fg[y]))), None)
    rep.check("F_g multiplicative", wit is None, wit)
    rank = Span(F, Fg.values()).dim
    rep.check("F_g injective", rank == len(Z), rank)
    K, _, _ = stabilizer_data(G, H, g)
    gi = G.inverse[g]

    def rho(a: int, v: dict) -> dict:
        # ρ2(a)⊗ρ1(a^g) with a^g = g^-1 a g
        ag = H.local(G.mul(G.mul(gi, a), g))
        r2 = _rho2(Hg, H.local(a))
        r1 = _rho1(Hg, ag)
        return {r2[k // n] * n + r1[k % n]: c for k, c in v.items()}

    inv = all(not vsub(rho(a, v), v) for a in K.elements for v in Fg.values())
    rep.check("image lies in the invariants U_g", inv)
    rows = []
    for a in K.elements:
        for k in range(n * n):
            e = {k: F.one}
            d = rho(a, e)
            vacc(d, k, -F.one)
            for key, c in d.items():
                rows.append((key, k, c))
    by_row: dict = {}
    for key, k, c in rows:
        vacc(by_row.setdefault(key, {}), k, c)
    dimU = len(nullspace(list(by_row.values()), list(range(n * n)), F))
    rep.check("rank F_g = dim U_g = |H|²/|K_g|", rank == dimU == H.order ** 2 // K.order, (rank, dimU))
    rep.info["dim_U_g"] = dimU
    return rep


# ---------------------------------------------------------------- Kaplansky, Chevalley

def kaplansky_check(H: HopfPresentation, assert_divisibility: bool = True) -> Report:
    prof = block_profile(dual_hopf(H, verify=False).algebra)
    rep = Report("Kaplansky divisibility")
    divides = all(H.dim % d == 0 for d in prof.dims)
    if assert_divisibility:
        rep.check("block dims of the dual divide dim H", divides, list(prof.dims))
    rep.info["dual_block_dims"] = list(prof.dims)
    rep.info["divides"] = divides
    return rep


class ChevalleyReport:
    def __init__(self, radical: list[dict], is_hopf_ideal: bool, report: Report, tensor_test):
        self.radical = radical
        self.radical_dim = len(radical)
        self.is_hopf_ideal = is_hopf_ideal
        self.report = report
        self.tensor_test = tensor_test

    def to_json(self) -> dict:
        return {"radical_dim": self.radical_dim, "is_hopf_ideal": self.is_hopf_ideal,
                "tensor_products_semisimple": self.tensor_test, "report": self.report.to_json()}


def tensor_representation(H: HopfPresentation, V: AlgebraRepresentation,
                          W: AlgebraRepresentation) -> AlgebraRepresentation:
    """a acts on V⊗W by Σ a1⊗a2 (index v*dim W + w)."""
    F = H.F
    n, m = V.dim_v, W.dim_v
    action = []
    for i in range(H.dim):
        M = [[F.zero] * (n * m) for _ in range(n * m)]
        for (j, k), c in H.comult[i].items():
            Aj, Bk = V.action[j], W.action[k]
            for r in range(n):
                for s in range(n):
                    if not Aj[r][s]:
                        continue
                    x = c * Aj[r][s]
                    for t in range(m):
                        for u in range(m):
                            if Bk[t][u]:
                                M[r * m + t][s * m + u] = M[r * m + t][s * m + u] + x * Bk[t][u]
        action.append(M)
    return AlgebraRepresentation(H.algebra, action)


def direct_sum(V: AlgebraRepresentation, W: AlgebraRepresentation) -> AlgebraRepresentation:
    F = V.algebra.F
    n, m = V.dim_v, W.dim_v
    action = []
    for A, B in zip(V.action, W.action):
        M = [[F.zero] * (n + m) for _ in range(n + m)]
        for r in range(n):
            M[r][:n] = list(A[r])
        for r in range(m):
            M[n + r][n:] = list(B[r])
        action.append(M)
    return AlgebraRepresentation(V.algebra, action)


def trivial_representation(H: HopfPresentation) -> AlgebraRepresentation:
    return AlgebraRepresentation(H.algebra, [[[c]] for c in H.counit])


def regular_representation(H: HopfPresentation) -> AlgebraRepresentation:
    A = H.algebra
    return AlgebraRepresentation(A, [A.left_matrix({i: H.F.one}) for i in range(H.dim)])


def chevalley_check(H: HopfPresentation, tensor_test: bool = True) -> ChevalleyReport:
    """Is Rad(H) a Hopf ideal?  Cross-checked against semisimplicity of V⊗W for simple V, W."""
    F = H.F
    rad = jacobson_radical(H.algebra)
    rep = Report("Chevalley property")
    rep.info["radical_dim"] = len(rad)
    eps_ok = all(H.eps(r) == 0 for r in rad)
    rspan = Span(F, rad)
    s_ok = all(rspan.contains(H.S(r)) for r in rad)
    if rad:
        _, q = quotient(H.algebra, rad)
    else:
        def q(v):
            return dict(v)
    d_ok = True
    wit = None
    for t, r in enumerate(rad):
        image: dict = {}
        for (i, j), c in H.delta(r).items():
            for a, x in q({i: F.one}).items():
                for b, y in q({j: F.one}).items():
                    vacc(image, (a, b), c * x * y)
        if image:
            d_ok, wit = False, t
            break
    rep.info["ε(Rad) = 0"] = eps_ok
    rep.info["S(Rad) ⊆ Rad"] = s_ok
    rep.info["Δ(Rad) ⊆ Rad⊗A + A⊗Rad"] = d_ok
    if wit is not None:
        rep.info["Δ witness"] = wit
    hopf_ideal = eps_ok and s_ok and d_ok
    tt = None
    if tensor_test:
        simples = simple_modules(H.algebra)
        tt = True
        for V in simples:
            for W in simples:
                VW = tensor_representation(H, V, W)
                if any(any(any(x for x in row) for row in VW.matrix(r)) for r in rad):
                    tt = False
        rep.check("Hopf ideal ⇔ tensor products of simples are semisimple", tt == hopf_ideal,
                  {"hopf_ideal": hopf_ideal, "tensor": tt})
        rep.info["simple_dims"] = sorted(V.dim_v for V in simples)
    return ChevalleyReport(rad, hopf_ideal, rep, tt)


# ---------------------------------------------------------------- categorical dimension

def categorical_dimension(H: HopfPresentation, R, V: AlgebraRepresentation, check_integral: bool = True):
    """tr(u|V) with u the Drinfeld element."""
    u = drinfeld_element(H, R).u
    M = V.matrix(u)
    t = sum((M[i][i] for i in range(V.dim_v)), H.F.zero)
    if check_integral and is_triangular(H, R) and not t.is_integer():
        raise ArithmeticError(f"categorical dimension {t} is not an integer")
    return t


def categorical_dimensions(H: HopfPresentation, R, reps: list) -> list:
    """tr(u|V) for each V, computing u once; integrality is enforced for triangular R."""
    u = drinfeld_element(H, R).u
    tri = is_triangular(H, R)
    out = []
    for V in reps:
        M = V.matrix(u)
        t = sum((M[i][i] for i in range(V.dim_v)), H.F.zero)
        if tri and not t.is_integer():
            raise ArithmeticError(f"categorical dimension {t} is not an integer")
        out.append(t)
    return out


def character_representation(H: HopfPresentation, values: list) -> AlgebraRepresentation:
    """One-dimensional representation from an algebra map H -> k given on the basis."""
    return AlgebraRepresentation(H.algebra, [[[H.F.coerce(v)]] for v in values])
