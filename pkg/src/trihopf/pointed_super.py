"""Pointed Hopf algebras H(D), supergroup algebras, bosonization and e^{r/2} twists.

Basis conventions: H(D) has basis a·y with y an ordered exterior monomial in the
skew primitives, and C[Q]⋉ΛV has basis q·y.  Index = mask·|G| + a, where bit k of
mask marks the k-th generator, so for Sweedler's algebra 0=1, 1=g, 2=x, 3=gx.
"""
from __future__ import annotations

from math import factorial

from .algebra import StructureAlgebra
from .group import BilinearForm, FiniteGroup, abelian_group, cyclic_group
from .hopf import (HopfPresentation, TensorSquareElement, check_hopf_map, co_opposite,
                   dual_hopf, group_algebra, grouplikes, presentations_equal, verify_hopf)
from .linalg import Span, mat_det, mat_identity, mat_inverse, mat_mul, mat_rank, vacc, vaxpy, vsub
from .report import Report
from .rmatrix import (drinfeld_element, is_triangular, minimal_part, r_u,
                      triangular_report, verify_quasitriangular)
from .scalar import CyclotomicField, field
from .twist import Twist, twist_hopf, twist_r, verify_twist


class DatumError(ValueError):
    def __init__(self, condition: str, witness=None):
        super().__init__(f"{condition}" + (f" (witness {witness})" if witness is not None else ""))
        self.condition = condition
        self.witness = witness


# ---------------------------------------------------------------- data

class Datum:
    """(G, F, n): abelian G, nondegenerate skew form F, multiplicities n on I_F = {g : F(g,g) = -1}."""

    def __init__(self, G: FiniteGroup, form: BilinearForm, n: dict, name: str = ""):
        self.G, self.form, self.name = G, form, name
        self.F = form.field
        if not form.is_skew():
            raise DatumError("F(x,y) = F(y,x)^-1")
        if not form.is_nondegenerate():
            raise DatumError("F nondegenerate")
        self.n = {int(g): int(k) for g, k in n.items() if k}
        for g, k in self.n.items():
            if k < 0:
                raise DatumError("n_g >= 0", g)
            if g not in self.I_F:
                raise DatumError("n_g > 0 only for g in I_F", g)
        # skew primitives ordered by g, then index
        self.variables = [(g, i) for g in sorted(self.n) for i in range(self.n[g])]

    @property
    def I_F(self) -> list[int]:
        return [g for g in self.G.elements if self.form(g, g) == -1]

    @property
    def I_F_prime(self) -> list[int]:
        return sorted(self.n)

    @property
    def dim(self) -> int:
        return self.G.order * 2 ** len(self.variables)

    def index(self, a: int, mask: int = 0) -> int:
        return mask * self.G.order + a

    def variable(self, g: int, i: int) -> int:
        """Basis index of the i-th skew primitive in V_g."""
        return self.index(0, 1 << self.variables.index((g, i)))

    def to_json(self) -> dict:
        G = self.G
        return {"table": [list(r) for r in G.table], "conductor": self.F.n,
                "form": [[self.form(a, b).to_json() for b in G.elements] for a in G.elements],
                "n": {str(g): k for g, k in self.n.items()}, "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "Datum":
        """Accepts {"orders": [...]} or {"table": ...}; the form as scalars or as {"exps": [[...]]}."""
        from .scalar import scalar_from_json
        G = FiniteGroup(data["table"]) if "table" in data else abelian_group(*data["orders"])
        N = int(data["conductor"])
        F = field(N)
        if "exps" in data:
            vals = [[F.zeta(e) for e in row] for row in data["exps"]]
        else:
            vals = [[scalar_from_json(x, N) for x in row] for row in data["form"]]
        n = {int(g): int(k) for g, k in data.get("n", {}).items()}
        return cls(G, BilinearForm(G, vals), n, data.get("name", ""))


def h_n_datum(n: int) -> Datum:
    """G = Z_2, F(g,g) = -1, n_g = n; H(0) = k[Z_2], H(1) = Sweedler, H(2) the 8-dim algebra."""
    F = field(2)
    G = cyclic_group(2)
    form = BilinearForm(G, [[F.one, F.one], [F.one, -F.one]])
    return Datum(G, form, {1: n} if n else {}, name=f"H({n})")


def z4z4_datum() -> Datum:
    """G = Z_4 x Z_4, F((a,b),(c,d)) = i^{ad-bc}(-1)^{ac}, n = 1 at g = (1,0) and 0 at g^-1."""
    F = field(4)
    G = abelian_group(4, 4)
    vals = [[F.zeta((a // 4) * (c % 4) - (a % 4) * (c // 4) + 2 * (a // 4) * (c // 4))
             for c in G.elements] for a in G.elements]
    return Datum(G, BilinearForm(G, vals), {4: 1}, name="Z4xZ4 unbalanced")


# ---------------------------------------------------------------- H(D)

def _monomial_product(m1: int, m2: int, sign_of_pair) -> object:
    """Coefficient of y1·y2 = c·(y1 ∪ y2); None when a generator repeats."""
    if m1 & m2:
        return None
    c = 1
    u = m1
    while u:
        hi = u.bit_length() - 1
        u &= ~(1 << hi)
        below = m2 & ((1 << hi) - 1)
        while below:
            lo = below.bit_length() - 1
            below &= ~(1 << lo)
            c = c * sign_of_pair(hi, lo)
    return c


def _bits(mask: int) -> list[int]:
    out, k = [], 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def _scaffold(A: StructureAlgebra, parity=None) -> HopfPresentation:
    """A presentation carrying only the algebra, used for tensor products before Δ is known."""
    n = A.dim
    return HopfPresentation(A, [{}] * n, [0] * n, [{}] * n, parity=parity)


def build_hd(d: Datum, verify: bool = True) -> HopfPresentation:
    G, F, form = d.G, d.F, d.form
    N = len(d.variables)
    gv = [g for g, _ in d.variables]
    nG = G.order
    dim = nG << N

    def pair(hi, lo):
        # u v = F(g_v, g_u) v u for u before v in the wrong order
        return form(gv[lo], gv[hi])

    mono = [[_monomial_product(m1, m2, pair) for m2 in range(1 << N)] for m1 in range(1 << N)]
    # y·b = Π_{x in y} F(b, g_x) b·y
    slide = [[F.one] * nG for _ in range(1 << N)]
    for m in range(1 << N):
        for b in G.elements:
            c = F.one
            for k in _bits(m):
                c = c * form(b, gv[k])
            slide[m][b] = c
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for m1 in range(1 << N):
        for a in G.elements:
            i = m1 * nG + a
            for m2 in range(1 << N):
                c = mono[m1][m2]
                if c is None:
                    continue
                for b in G.elements:
                    table[i][m2 * nG + b] = {(m1 | m2) * nG + G.mul(a, b): slide[m1][b] * c}
    names = [(G.name(a) if a else "1") if not m else
             ("" if not a else G.name(a)) + "".join(f"x{k}" for k in _bits(m))
             for m in range(1 << N) for a in G.elements]
    A = StructureAlgebra(F, table, {0: F.one}, names)
    T = _scaffold(A)
    one = F.one
    comult, antipode = [None] * dim, [None] * dim
    dx = [{((1 << k) * nG, 0): one, (gv[k], (1 << k) * nG): one} for k in range(N)]
    sx = [{(1 << k) * nG + G.inverse[gv[k]]: -one} for k in range(N)]
    for m in range(1 << N):
        ks = _bits(m)
        for a in G.elements:
            D = {(a, a): one}
            s = {G.inverse[a]: one}
            for k in ks:
                D = T.tmul(D, dx[k])
                s = A.mul(sx[k], s)
            comult[m * nG + a] = D
            antipode[m * nG + a] = s
    counit = [one if i < nG else F.zero for i in range(dim)]
    H = HopfPresentation(A, comult, counit, antipode, name=d.name or "H(D)")
    if verify:
        rep = verify_hopf(H)
        if not rep.ok:
            raise AssertionError(f"H(D) fails: {[c.axiom for c in rep.failures()]}")
    return H


def hd_report(d: Datum, H: HopfPresentation | None = None) -> Report:
    H = H or build_hd(d, verify=False)
    rep = Report(f"H(D) {d.name}".strip())
    rep.extend(verify_hopf(H), "hopf: ")
    rep.check("dim = |G|·2^{Σ n_g}", H.dim == d.G.order * 2 ** sum(d.n.values()))
    gl = grouplikes(H).as_basis_indices()
    rep.check("grouplikes = G", gl == list(range(d.G.order)), gl)
    rep.info["dim"] = H.dim
    return rep


def s4_check(H: HopfPresentation) -> Report:
    n, F = H.dim, H.F
    S = H.antipode_matrix()
    S2 = mat_mul(S, S, F)
    S4 = mat_mul(S2, S2, F)
    I = mat_identity(n, F)
    rep = Report("S^4 = Id")
    rep.check("S^4 = Id", S4 == I)
    rep.info["S2_is_identity"] = S2 == I
    return rep


def biproduct_check(d: Datum, H: HopfPresentation | None = None) -> Report:
    """π(a·y) = [y = 1]a is a Hopf projection onto k[G] splitting the inclusion; B = coinvariants."""
    H = H or build_hd(d, verify=False)
    F, nG = H.F, d.G.order
    K = group_algebra(d.G, F, verify=False)
    pi = [{i: F.one} if i < nG else {} for i in range(H.dim)]
    rep = Report("biproduct projection")
    r = check_hopf_map(pi, H, K, "π")
    for c in r.checks:
        if c.axiom != "bijective":
            rep.check("π " + c.axiom, c.ok, c.witness)
    rep.check("π∘i = id on k[G]", all(pi[a] == {a: F.one} for a in range(nG)))
    # B = {x : (I⊗π)Δ(x) = x⊗1}
    rows: dict = {}
    for i in range(H.dim):
        col: dict = {}
        for (j, k), c in H.comult[i].items():
            if k < nG:
                vacc(col, (j, k), c)
        vacc(col, (i, 0), -F.one)
        for key, c in col.items():
            rows.setdefault(key, {})[i] = c
    from .linalg import nullspace
    B = nullspace(list(rows.values()), list(range(H.dim)), F)
    rep.check("dim B · |G| = dim H", len(B) * nG == H.dim, len(B))
    rep.info["dim_B"] = len(B)
    return rep


# ---------------------------------------------------------------- minimal triangular structures

def _check_phi(d: Datum, psi: list[int]) -> None:
    """psi = φ∘f as a map G -> G; φ ∈ Φ iff psi is an automorphism with F(b,ψc) = F(ψb,c)
    and ψ(g) = g on I_F'."""
    G, form = d.G, d.form
    if sorted(psi) != list(G.elements):
        raise DatumError("φ bijective")
    for a in G.elements:
        for b in G.elements:
            if psi[G.mul(a, b)] != G.mul(psi[a], psi[b]):
                raise DatumError("φ homomorphism", (a, b))
    for b in G.generators():
        for c in G.generators():
            if form(b, psi[c]) != form(psi[b], c):
                raise DatumError("φ*(α) = φ(α^-1)", (b, c))
    for g in d.I_F_prime:
        if psi[g] != g:
            raise DatumError("(φ∘f)(g) = g on I_F'", g)


def _check_m(d: Datum, M: dict) -> None:
    """M[g][j][i]: coefficient of the j-th basis vector of V_{g^-1} in M_g(x_i*)."""
    G, F = d.G, d.F
    for g in d.I_F_prime:
        gi = G.inverse[g]
        if d.n.get(gi, 0) != d.n[g]:
            raise DatumError("n_g = n_{g^-1} (otherwise S(k) is empty)", g)
        m = M.get(g)
        if m is None or len(m) != d.n[g] or any(len(r) != d.n[g] for r in m):
            raise DatumError("M_g : V_g* -> V_{g^-1} square of size n_g", g)
        if mat_det([[F.coerce(x) for x in r] for r in m], F) == 0:
            raise DatumError("M_g invertible", g)
        mi = M[gi]
        for i in range(d.n[g]):
            for j in range(d.n[g]):
                if F.coerce(mi[i][j]) != F.coerce(m[j][i]):
                    raise DatumError("M_g* = M_{g^-1}", (g, i, j))


class TriangularStructure:
    def __init__(self, f: list[dict], R: TensorSquareElement, orientation: str, report: Report):
        self.f = f
        self.R = R
        self.orientation = orientation
        self.report = report


def canonical_phi(d: Datum) -> list[int]:
    return list(d.G.elements)


def identity_m(d: Datum) -> dict:
    F = d.F
    return {g: [[F.one if i == j else F.zero for i in range(d.n[g])] for j in range(d.n[g])]
            for g in d.I_F_prime}


def minimal_triangular_structures(d: Datum, psi: list[int] | None = None, M: dict | None = None,
                                  H: HopfPresentation | None = None) -> TriangularStructure:
    """Assemble f_T : H(D)*cop -> H(D) from α ↦ φ(α), P_x ↦ M_g(x) and the R-matrix it defines.

    φ is passed as psi = φ∘f on G (so f(b) ↦ psi[b]); the canonical choice is psi = id.
    """
    psi = canonical_phi(d) if psi is None else list(psi)
    M = identity_m(d) if M is None else M
    _check_phi(d, psi)
    _check_m(d, M)
    H = H or build_hd(d)
    G, F, form = d.G, d.F, d.form
    nG, n = G.order, H.dim
    D = dual_hopf(H, verify=False)
    Dc = co_opposite(D)
    # generators of H*: α_b = f(b) and P_x for x in the dual basis of each V_g
    gens = []
    for b in G.elements:
        alpha = {a: form(b, a) for a in G.elements}
        gens.append((alpha, {psi[b]: F.one}))
    for g in d.I_F_prime:
        gi = G.inverse[g]
        for i in range(d.n[g]):
            P = {d.variable(g, i) + a: F.one for a in G.elements}
            img: dict = {}
            for j in range(d.n[gi]):
                c = F.coerce(M[g][j][i])
                if c:
                    vacc(img, d.variable(gi, j), c)
            gens.append((P, img))
    # closure under right multiplication by generators
    span = Span(F)
    words: list = []
    frontier = [(D.one(), H.one())]
    span.add(D.one())
    words.append(frontier[0])
    while frontier and len(words) < n:
        new = []
        for w, fw in frontier:
            for p, fp in gens:
                x = D.mul(w, p)
                if span.add(x):
                    item = (x, H.mul(fw, fp))
                    words.append(item)
                    new.append(item)
        frontier = new
    rep = Report("minimal triangular structure f_T")
    rep.check("α and P_x generate H(D)*", len(words) == n, len(words))
    if len(words) != n:
        raise AssertionError("generators do not span the dual")
    W = [[words[c][0].get(r, F.zero) for c in range(n)] for r in range(n)]
    Wi = mat_inverse(W, F)
    # f(e_r*) = Σ_c Wi[c][r] f(word_c)
    f = []
    for r in range(n):
        v: dict = {}
        for c in range(n):
            if Wi[c][r]:
                vaxpy(v, words[c][1], Wi[c][r])
        f.append(v)
    rep.extend(check_hopf_map(f, Dc, H, "f_T"), "f_T: ")
    candidates = {
        "R = Σ e_i⊗f(e_i*)": {(i, j): c for i in range(n) for j, c in f[i].items()},
        "R = Σ f(e_i*)⊗e_i": {(j, i): c for i in range(n) for j, c in f[i].items()},
    }
    chosen = None
    tried = {}
    for name, R in candidates.items():
        q = verify_quasitriangular(H, R)
        tried[name] = q.ok and is_triangular(H, R)
        if tried[name] and chosen is None:
            chosen = (name, R, q)
    rep.info["orientations"] = tried
    if chosen is None:
        rep.check("some orientation of R_T is triangular", False, tried)
        return TriangularStructure(f, None, None, rep)
    name, R, q = chosen
    rep.info["orientation"] = name
    rep.extend(q, "qt: ")
    rep.check("R R21 = 1⊗1", True)
    _, rank = minimal_part(H, R)
    rep.check("minimal (rank = dim)", rank == n, rank)
    rep.info["rank"] = rank
    return TriangularStructure(f, TensorSquareElement(H, R), name, rep)


# ---------------------------------------------------------------- supergroup algebras

class SuperGroupDatum:
    """Q acting on an odd space of dimension V by matrices action[q] (V x V, columns = images)."""

    def __init__(self, Q: FiniteGroup, V: int, action: list, F: CyclotomicField, name: str = ""):
        self.Q, self.V, self.F, self.name = Q, V, F, name
        self.action = [[[F.coerce(x) for x in row] for row in m] for m in action] if V else [[] for _ in Q.elements]
        self.verify()

    def verify(self) -> None:
        Q, F = self.Q, self.F
        if len(self.action) != Q.order:
            raise ValueError("one action matrix per group element")
        if self.V == 0:
            return
        if self.action[0] != mat_identity(self.V, F):
            raise ValueError("identity must act trivially")
        for a in Q.elements:
            for b in Q.elements:
                if mat_mul(self.action[a], self.action[b], F) != self.action[Q.mul(a, b)]:
                    raise ValueError(f"action is not a representation at {(a, b)}")

    def odd_index(self, k: int) -> int:
        return (1 << k) * self.Q.order

    def to_json(self) -> dict:
        return {"table": [list(r) for r in self.Q.table], "V": self.V, "conductor": self.F.n,
                "action": [[[x.to_json() for x in row] for row in m] for m in self.action],
                "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "SuperGroupDatum":
        from .scalar import scalar_from_json
        N = int(data["conductor"])
        F = field(N)
        Q = FiniteGroup(data["table"]) if "table" in data else abelian_group(*data["orders"])
        act = [[[scalar_from_json(x, N) for x in row] for row in m] for m in data.get("action", [])]
        return cls(Q, int(data["V"]), act or [[] for _ in Q.elements], F, data.get("name", ""))


def sign_datum(F: CyclotomicField | None = None) -> SuperGroupDatum:
    """Z_2 acting on a one-dimensional odd space by -1."""
    F = F or field(2)
    return SuperGroupDatum(cyclic_group(2), 1, [[[F.one]], [[-F.one]]], F, "C[Z2]⋉Λ(C)")


def exterior_datum(V: int, F: CyclotomicField | None = None) -> SuperGroupDatum:
    """ΛV with trivial group."""
    F = F or field(2)
    return SuperGroupDatum(cyclic_group(1), V, [mat_identity(V, F)], F, f"Λ(C^{V})")


def _ext_mul(u: dict, v: dict) -> dict:
    """Product in ΛV of vectors {mask: c}."""
    out: dict = {}
    for m1, a in u.items():
        for m2, b in v.items():
            s = _monomial_product(m1, m2, lambda hi, lo: -1)
            if s is not None:
                vacc(out, m1 | m2, a * b * s)
    return out


def supergroup_algebra(sgd: SuperGroupDatum, verify: bool = True) -> HopfPresentation:
    Q, V, F = sgd.Q, sgd.V, sgd.F
    nQ = Q.order
    dim = nQ << V
    one = F.one
    # ρ(h) on every monomial
    rho = []
    for h in Q.elements:
        m = sgd.action[h]
        imgs = []
        for mask in range(1 << V):
            y = {0: one}
            for k in _bits(mask):
                col = {1 << r: m[r][k] for r in range(V) if m[r][k]}
                y = _ext_mul(y, col)
            imgs.append(y)
        rho.append(imgs)
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for m1 in range(1 << V):
        for q in Q.elements:
            i = m1 * nQ + q
            for m2 in range(1 << V):
                for q2 in Q.elements:
                    # y q2 = q2 ρ(q2^-1)(y)
                    y = _ext_mul(rho[Q.inverse[q2]][m1], {m2: one})
                    qq = Q.mul(q, q2)
                    table[i][m2 * nQ + q2] = {m * nQ + qq: c for m, c in y.items()}
    parity = [bin(i // nQ).count("1") % 2 for i in range(dim)]
    A = StructureAlgebra(F, table, {0: one})
    T = _scaffold(A, parity)
    dx = [{(sgd.odd_index(k), 0): one, (0, sgd.odd_index(k)): one} for k in range(V)]
    comult, antipode = [None] * dim, [None] * dim
    for m in range(1 << V):
        ks = _bits(m)
        for q in Q.elements:
            D = {(q, q): one}
            for k in ks:
                D = T.tmul(D, dx[k])
            comult[m * nQ + q] = D
            # S(q·y) = (-1)^{|y|} y·q^-1
            s = A.mul({m * nQ: one if len(ks) % 2 == 0 else -one}, {Q.inverse[q]: one})
            antipode[m * nQ + q] = s
    counit = [one if i < nQ else F.zero for i in range(dim)]
    H = HopfPresentation(A, comult, counit, antipode, parity=parity, name=sgd.name or "supergroup algebra")
    if verify:
        rep = verify_hopf(H)
        if not rep.ok:
            raise AssertionError(f"supergroup algebra fails: {[c.axiom for c in rep.failures()]}")
    return H


def super_cocommutative(H: HopfPresentation) -> bool:
    """β∘Δ = Δ with β(v⊗w) = (-1)^{p(v)p(w)} w⊗v."""
    return all(not vsub(H.flip(d), d) for d in H.comult)


# ---------------------------------------------------------------- bosonization

def _as_vector(H: HopfPresentation, g) -> dict:
    return {g: H.F.one} if isinstance(g, int) else dict(g)


def _split_by_second_leg(X: dict, parity) -> tuple[dict, dict]:
    even, odd = {}, {}
    for (j, k), c in X.items():
        (odd if parity[k] else even)[(j, k)] = c
    return even, odd


def _left_mul(T: HopfPresentation, g: dict, X: dict) -> dict:
    return T.tmul({(a, b): c for a, c in g.items() for b, u in T.algebra.unit.items()
                   for c in [c * u]}, X)


def _parity_of_conjugation(H: HopfPresentation, u: dict) -> list[int]:
    """p(i) with u e_i u^-1 = (-1)^{p(i)} e_i; raises if the basis is not homogeneous."""
    F = H.F
    ui = H.algebra.inverse(u)
    out = []
    for i in range(H.dim):
        c = H.mul(H.mul(u, {i: F.one}), ui)
        if not vsub(c, {i: F.one}):
            out.append(0)
        elif not vsub(c, {i: -F.one}):
            out.append(1)
        else:
            raise ValueError(f"basis vector {i} is not an eigenvector of Ad(u) with eigenvalue ±1")
    return out


def _check_parity_grouplike(H: HopfPresentation, g: dict, parity) -> None:
    F = H.F
    if vsub(H.mul(g, g), H.one()):
        raise ValueError("g² ≠ 1")
    if H.eps(g) != 1 or vsub(H.delta(g), {(a, b): x * y for a, x in g.items() for b, y in g.items()}):
        raise ValueError("g is not grouplike")
    for i in range(H.dim):
        sign = -F.one if parity[i] else F.one
        if vsub(H.mul(g, {i: F.one}), H.mul({i: sign}, g)):
            raise ValueError(f"g e_{i} g^-1 ≠ (-1)^p e_{i}")


def bosonize(H: HopfPresentation, g) -> HopfPresentation:
    """Super (A, g) -> ordinary: Δ(a) = Δ₀(a) − (−1)^{p(a)} (g⊗1)Δ₁(a), S(a) = g^{p(a)} S(a)."""
    par = H.parity or (0,) * H.dim
    g = _as_vector(H, g)
    _check_parity_grouplike(H, g, par)
    T = _scaffold(H.algebra)
    comult, antipode = [], []
    for i in range(H.dim):
        d0, d1 = _split_by_second_leg(H.comult[i], par)
        gd1 = _left_mul(T, g, d1)
        d = dict(d0)
        vaxpy(d, gd1, H.F.one if par[i] else -H.F.one)
        comult.append(d)
        antipode.append(H.mul(g, H.antipode[i]) if par[i] else dict(H.antipode[i]))
    return HopfPresentation(H.algebra, comult, H.counit, antipode,
                            name=f"bosonization of {H.name}" if H.name else "bosonization")


def unbosonize(H: HopfPresentation, u) -> HopfPresentation:
    """Ordinary (A, u) with u² = 1 -> super: parity from Ad(u), Δ̃ = Δ₀ − (−1)^p (u⊗1)Δ₁, S̃ = u^p S."""
    u = _as_vector(H, u)
    if vsub(H.mul(u, u), H.one()):
        raise ValueError("u² ≠ 1")
    par = _parity_of_conjugation(H, u)
    _check_parity_grouplike(H, u, par)
    T = _scaffold(H.algebra)
    comult, antipode = [], []
    for i in range(H.dim):
        d0, d1 = _split_by_second_leg(H.comult[i], par)
        ud1 = _left_mul(T, u, d1)
        d = dict(d0)
        vaxpy(d, ud1, H.F.one if par[i] else -H.F.one)
        comult.append(d)
        antipode.append(H.mul(u, H.antipode[i]) if par[i] else dict(H.antipode[i]))
    return HopfPresentation(H.algebra, comult, H.counit, antipode, parity=par,
                            name=f"super form of {H.name}" if H.name else "super form")


# ---------------------------------------------------------------- R-matrix correspondence

def _split_even_odd(X: dict, parity) -> tuple[dict, dict]:
    R0, R1 = {}, {}
    for (i, j), c in X.items():
        if parity[i] != parity[j]:
            raise ValueError("element is not even")
        (R1 if parity[i] else R0)[(i, j)] = c
    return R0, R1


def _coeffs(X) -> dict:
    return X.coeffs if isinstance(X, TensorSquareElement) else dict(X)


def _right_leg_mul(T: HopfPresentation, g: dict, X: dict) -> dict:
    return T.tmul({(a, b): cu * c for a, cu in T.algebra.unit.items() for b, c in g.items()}, X)


def super_r_to_ordinary(Hs: HopfPresentation, Rs, g) -> tuple[HopfPresentation, TensorSquareElement]:
    """R = (ℛ₀ + (1⊗g)ℛ₁) R_g on the bosonization."""
    A = bosonize(Hs, g)
    g = _as_vector(Hs, g)
    par = Hs.parity or (0,) * Hs.dim
    R0, R1 = _split_even_odd(_coeffs(Rs), par)
    X = dict(R0)
    vaxpy(X, _right_leg_mul(A, g, R1), A.F.one)
    return A, TensorSquareElement(A, A.tmul(X, r_u(A, g).coeffs))


def ordinary_r_to_super(A: HopfPresentation, R, u) -> tuple[HopfPresentation, TensorSquareElement]:
    """ℛ = (R₀ + (1⊗u)R₁) R_u on the super form."""
    Hs = unbosonize(A, u)
    u = _as_vector(A, u)
    R0, R1 = _split_even_odd(_coeffs(R), Hs.parity or (0,) * A.dim)
    X = dict(R0)
    vaxpy(X, _right_leg_mul(A, u, R1), A.F.one)
    return Hs, TensorSquareElement(Hs, A.tmul(X, r_u(A, u).coeffs))


super_r_correspondence = super_r_to_ordinary


def super_triangular_report(Hs: HopfPresentation, Rs) -> Report:
    rep = Report("triangular Hopf superalgebra")
    rep.extend(verify_hopf(Hs), "hopf: ")
    rep.extend(verify_quasitriangular(Hs, Rs), "qt: ")
    rep.check("ℛ even", all(Hs.p(i) == Hs.p(j) for i, j in _coeffs(Rs)))
    rep.check("ℛ ℛ21 = 1⊗1", is_triangular(Hs, Rs))
    d = drinfeld_element(Hs, Rs)
    rep.check("Drinfeld element = 1", d.is_one())
    return rep


def r_correspondence_report(Hs: HopfPresentation, Rs, g) -> Report:
    """Both sides of the correspondence and the round trip, for one instance."""
    rep = Report("super/ordinary R correspondence")
    rep.extend(super_triangular_report(Hs, Rs), "super: ")
    A, R = super_r_to_ordinary(Hs, Rs, g)
    t = triangular_report(A, R)
    rep.extend(t, "ordinary: ")
    d = drinfeld_element(A, R)
    gv = _as_vector(Hs, g)
    rep.check("ordinary: u = g", not vsub(d.u, gv))
    rep.check("ordinary: u² = 1", not vsub(d.squared(), A.one()))
    Hs2, Rs2 = ordinary_r_to_super(A, R, gv)
    rep.check("round trip: presentation", presentations_equal(Hs2, Hs))
    rep.check("round trip: R-matrix", not vsub(Rs2.coeffs, _coeffs(Rs)))
    rep.info["rank"] = t.info.get("rank")
    return rep


# ---------------------------------------------------------------- twists

def _is_odd_primitive(H: HopfPresentation, i: int) -> bool:
    one = H.algebra.unit
    d = {(i, k): c for k, c in one.items()}
    for k, c in one.items():
        vacc(d, (k, i), c)
    return H.p(i) == 1 and not vsub(H.comult[i], d)


def tensor_exp(H: HopfPresentation, X: dict, scale=None) -> dict:
    """exp(scale·X) in A⊗A for nilpotent X; exact, stops when the power vanishes."""
    F = H.F
    scale = F.one if scale is None else F.coerce(scale)
    Y = {k: c * scale for k, c in X.items()}
    out = H.one2()
    power = H.one2()
    k = 0
    while True:
        k += 1
        power = H.tmul(power, Y)
        if not power:
            return out
        if k > 2 * H.dim + 2:
            raise ValueError("element is not nilpotent")
        vaxpy(out, power, F(1) / F(factorial(k)))


def exp_twist(H: HopfPresentation, r: dict) -> Twist:
    """𝒥 = exp(r/2) for r = Σ r_ij v_i⊗v_j with v_i odd primitive and r_ij = r_ji."""
    F = H.F
    r = {k: F.coerce(c) for k, c in _coeffs(r).items() if c}
    for (i, j), c in r.items():
        if not (_is_odd_primitive(H, i) and _is_odd_primitive(H, j)):
            raise ValueError(f"r must lie in V⊗V with V odd primitive (entry {(i, j)})")
        if r.get((j, i), F.zero) != c:
            raise ValueError(f"r must be symmetric (entry {(i, j)})")
    J = tensor_exp(H, r, F(1) / F(2))
    return verify_twist(H, J)


def r_matrix_rank(H: HopfPresentation, r: dict) -> int:
    idx = sorted({i for i, _ in r} | {j for _, j in r})
    return mat_rank([[r.get((i, j), H.F.zero) for j in idx] for i in idx], H.F) if idx else 0


def exp_twist_report(H: HopfPresentation, r: dict, odd: list[int] | None = None) -> Report:
    """Twist certificate plus minimality of ((ΛV)^𝒥, 𝒥21^-1 𝒥) against nondegeneracy of r."""
    T = exp_twist(H, r)
    rep = Report("exp(r/2) twist")
    rep.extend(T.report, "twist: ")
    HJ = twist_hopf(H, T)
    RJ = twist_r(T)
    rep.extend(super_triangular_report(HJ, RJ), "twisted: ")
    _, rank = minimal_part(HJ, RJ)
    odd = odd if odd is not None else [i for i in range(H.dim) if _is_odd_primitive(H, i)]
    nondeg = r_matrix_rank(H, _coeffs(r)) == len(odd)
    rep.info["rank"] = rank
    rep.info["r_nondegenerate"] = nondeg
    minimal = rank == H.dim
    rep.check("minimal iff r nondegenerate", minimal == nondeg, (rank, nondeg))
    return rep


def even_twist_correspondence(Hs: HopfPresentation, J, g) -> tuple[HopfPresentation, Twist]:
    """J = 𝒥₀ − (g⊗1)𝒥₁ on the bosonization, certified as a twist there."""
    A = bosonize(Hs, g)
    g = _as_vector(Hs, g)
    J0, J1 = _split_even_odd(_coeffs(J.J if isinstance(J, Twist) else J), Hs.parity or (0,) * Hs.dim)
    X = dict(J0)
    vaxpy(X, _left_mul(A, g, J1), -A.F.one)
    return A, verify_twist(A, X)


def twist_square_report(Hs: HopfPresentation, J: Twist, g) -> Report:
    """Twisting commutes with bosonization: bos(𝒜^𝒥) = bos(𝒜)^J."""
    rep = Report("twisting commutes with bosonization")
    A, T = even_twist_correspondence(Hs, J, g)
    rep.extend(T.report, "J: ")
    left = bosonize(twist_hopf(Hs, J), g)
    right = twist_hopf(A, T)
    rep.check("bos(𝒜^𝒥) = bos(𝒜)^J", presentations_equal(left, right))
    return rep


# ---------------------------------------------------------------- Sweedler family

def sweedler() -> HopfPresentation:
    return build_hd(h_n_datum(1))


def sweedler_r(H: HopfPresentation, lam) -> TensorSquareElement:
    """R_λ = R_g − (λ/2)(x⊗x + gx⊗x − x⊗gx + gx⊗gx) in the basis 1, g, x, gx.

    With Δ(x) = x⊗1 + g⊗x this is J21^-1 R_g J for J = 1 − (λ/2) gx⊗x.
    """
    F = H.F
    h = F.coerce(lam) / F(2)
    R = r_u(H, {1: F.one}).coeffs
    for k, c in {(2, 2): -h, (3, 2): -h, (2, 3): h, (3, 3): -h}.items():
        vacc(R, k, c)
    return TensorSquareElement(H, R)


def sweedler_twist(H: HopfPresentation, lam) -> Twist:
    """J_λ = 1 − (λ/2) gx⊗x."""
    F = H.F
    J = {(0, 0): F.one}
    if lam:
        J[(3, 2)] = -F.coerce(lam) / F(2)
    return verify_twist(H, J)


def sweedler_parameter(H: HopfPresentation, R) -> object:
    """λ with R = R_λ, or None when R is not in the family."""
    R = _coeffs(R)
    lam = -2 * R.get((2, 2), H.F.zero)
    return lam if sweedler_r(H, lam) == TensorSquareElement(H, R) else None
