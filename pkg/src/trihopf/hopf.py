"""Hopf algebra presentations by structure constants, with Koszul signs for super objects."""
from __future__ import annotations

from .algebra import (StructureAlgebra, algebra_generators, characters,
                      group_algebra_structure, verify_algebra)
from .group import FiniteGroup
from .linalg import (Span, minimal_polynomial, nullspace, vacc, vaxpy, vdiff_witness,
                     vscale, vsub)
from .report import Report
from .scalar import CyclotomicField, scalar_from_json


def _basic_table(A: StructureAlgebra):
    """basic[i][j] = k when e_i e_j is exactly e_k, else None."""
    b = getattr(A, "_basic", None)
    if b is None:
        one = A.F.one
        b = [[next(iter(e)) if len(e) == 1 and next(iter(e.values())) == one else None
              for e in row] for row in A.table]
        A._basic = b
    return b


class HopfPresentation:
    """Algebra plus comult[i] = Δ(e_i) as {(j,k): c}, counit list, antipode[j] = S(e_j) as a vector."""

    def __init__(self, algebra: StructureAlgebra, comult, counit, antipode, parity=None, name=""):
        self.algebra = algebra
        self.F = algebra.F
        self.dim = algebra.dim
        self.comult = [{k: c for k, c in d.items() if c} for d in comult]
        self.counit = [self.F.coerce(c) for c in counit]
        self.antipode = [{k: c for k, c in s.items() if c} for s in antipode]
        self.parity = tuple(parity) if parity is not None and any(parity) else None
        self.name = name

    @property
    def is_super(self) -> bool:
        return self.parity is not None

    def p(self, i: int) -> int:
        return self.parity[i] if self.parity else 0

    # ---- structure maps on sparse vectors
    def mul(self, x: dict, y: dict) -> dict:
        return self.algebra.mul(x, y)

    def one(self) -> dict:
        return self.algebra.one()

    def delta(self, x: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            for k, v in self.comult[i].items():
                vacc(out, k, c * v)
        return out

    def eps(self, x: dict):
        return sum((c * self.counit[i] for i, c in x.items()), self.F.zero)

    def S(self, x: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            vaxpy(out, self.antipode[i], c)
        return out

    def antipode_matrix(self) -> list:
        n, z = self.dim, self.F.zero
        return [[self.antipode[j].get(i, z) for j in range(n)] for i in range(n)]

    def homogeneous_parity(self, x: dict):
        ps = {self.p(i) for i in x}
        return ps.pop() if len(ps) == 1 else None

    # ---- tensor powers
    def one2(self) -> dict:
        u = self.algebra.unit
        return {(i, j): a * b for i, a in u.items() for j, b in u.items()}

    def tmul(self, X: dict, Y: dict) -> dict:
        """Product in A⊗A: (a⊗b)(a'⊗b') = (-1)^{p(a')p(b)} aa'⊗bb'."""
        A = self.algebra
        T = A.table
        basic = _basic_table(A)
        par = self.parity
        out: dict = {}
        for (i, j), x in X.items():
            Ti, Tj, Bi, Bj = T[i], T[j], basic[i], basic[j]
            pj = par[j] if par else 0
            for (k, l), y in Y.items():
                a, b = Bi[k], Bj[l]
                c = x * y
                if pj and par[k]:
                    c = -c
                if a is not None and b is not None:
                    vacc(out, (a, b), c)
                    continue
                e1, e2 = Ti[k], Tj[l]
                if not e1 or not e2:
                    continue
                for a, ca in e1.items():
                    cca = c * ca
                    for b, cb in e2.items():
                        vacc(out, (a, b), cca * cb)
        return out

    def tmul3(self, X: dict, Y: dict) -> dict:
        """Product in A⊗A⊗A with Koszul signs."""
        A = self.algebra
        T = A.table
        basic = _basic_table(A)
        par = self.parity
        out: dict = {}
        for (i, j, k), x in X.items():
            for (l, m, n), y in Y.items():
                c = x * y
                if par and ((par[l] and (par[j] + par[k]) % 2) ^ (par[m] and par[k])):
                    c = -c
                a, b, d = basic[i][l], basic[j][m], basic[k][n]
                if a is not None and b is not None and d is not None:
                    vacc(out, (a, b, d), c)
                    continue
                e1, e2, e3 = T[i][l], T[j][m], T[k][n]
                if not e1 or not e2 or not e3:
                    continue
                for a, ca in e1.items():
                    for b, cb in e2.items():
                        cab = c * ca * cb
                        for d, cd in e3.items():
                            vacc(out, (a, b, d), cab * cd)
        return out

    def flip(self, X: dict) -> dict:
        """X_21, with the sign (-1)^{p(a)p(b)} in the super case."""
        par = self.parity
        out = {}
        for (i, j), c in X.items():
            out[(j, i)] = -c if par and par[i] and par[j] else c
        return out

    def delta_left(self, X: dict) -> dict:
        """(Δ⊗Id)(X) for X in A⊗A."""
        out: dict = {}
        for (i, j), c in X.items():
            for (a, b), v in self.comult[i].items():
                vacc(out, (a, b, j), c * v)
        return out

    def delta_right(self, X: dict) -> dict:
        """(Id⊗Δ)(X)."""
        out: dict = {}
        for (i, j), c in X.items():
            for (a, b), v in self.comult[j].items():
                vacc(out, (i, a, b), c * v)
        return out

    def leg(self, X: dict, pos: tuple) -> dict:
        """Embed X in A⊗A⊗A at legs pos, e.g. (0, 2) gives X_13."""
        u = self.algebra.unit
        out: dict = {}
        missing = ({0, 1, 2} - set(pos)).pop()
        for (i, j), c in X.items():
            for k, cu in u.items():
                key = [None, None, None]
                key[pos[0]], key[pos[1]], key[missing] = i, j, k
                vacc(out, tuple(key), c * cu)
        return out

    def tinv(self, X: dict) -> dict:
        return tensor_inv_raw(self, X)

    # ---- misc
    def is_cocommutative(self) -> bool:
        return all(not vsub(self.flip(d), d) for d in self.comult)

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()

    def to_json(self) -> dict:
        n, z = self.dim, self.F.zero
        out = self.algebra.to_json()
        out["comult"] = [[[self.comult[i].get((j, k), z).to_json() for k in range(n)]
                          for j in range(n)] for i in range(n)]
        out["counit"] = [c.to_json() for c in self.counit]
        out["antipode"] = [[x.to_json() for x in row] for row in self.antipode_matrix()]
        if self.parity:
            out["parity"] = list(self.parity)
        return out

    def embedded(self, m: int) -> "HopfPresentation":
        """The same presentation over Q(zeta_m); m must be a multiple of the conductor."""
        def emb(v: dict) -> dict:
            return {k: c.embed(m) for k, c in v.items()}
        A = self.algebra
        B = StructureAlgebra(CyclotomicField(m), [[emb(e) for e in row] for row in A.table],
                             emb(A.unit), A.names)
        return HopfPresentation(B, [emb(d) for d in self.comult], [c.embed(m) for c in self.counit],
                                [emb(s) for s in self.antipode], parity=self.parity, name=self.name)

    @classmethod
    def from_json(cls, data: dict) -> "HopfPresentation":
        for key in ("dim", "mult", "unit", "comult", "counit", "antipode"):
            if key not in data:
                raise ValueError(f"Hopf file is missing '{key}'")
        A = StructureAlgebra.from_json(data)
        n, N = A.dim, A.F.n
        cm = data["comult"]
        if len(cm) != n or any(len(r) != n or any(len(e) != n for e in r) for r in cm):
            raise ValueError("comult must be a dim x dim x dim array")
        comult = []
        for i in range(n):
            d = {}
            for j in range(n):
                for k in range(n):
                    c = scalar_from_json(cm[i][j][k], N)
                    if c:
                        d[(j, k)] = c
            comult.append(d)
        counit = [scalar_from_json(x, N) for x in data["counit"]]
        S = [[scalar_from_json(x, N) for x in row] for row in data["antipode"]]
        if len(counit) != n or len(S) != n or any(len(r) != n for r in S):
            raise ValueError("counit/antipode have the wrong shape")
        antipode = [{i: S[i][j] for i in range(n) if S[i][j]} for j in range(n)]
        return cls(A, comult, counit, antipode, parity=data.get("parity"))


class TensorSquareElement:
    """An element of A⊗A, stored sparsely as {(i, j): c}."""

    def __init__(self, host: HopfPresentation, coeffs: dict):
        self.host = host
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    def __mul__(self, other: "TensorSquareElement") -> "TensorSquareElement":
        return TensorSquareElement(self.host, self.host.tmul(self.coeffs, other.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSquareElement) and not vsub(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def inverse(self) -> "TensorSquareElement":
        return TensorSquareElement(self.host, tensor_inv_raw(self.host, self.coeffs))

    def flip(self) -> "TensorSquareElement":
        return TensorSquareElement(self.host, self.host.flip(self.coeffs))

    def matrix(self) -> list:
        n, z = self.host.dim, self.host.F.zero
        return [[self.coeffs.get((i, j), z) for j in range(n)] for i in range(n)]

    def to_json(self) -> dict:
        return {"conductor": self.host.F.n, "dim": self.host.dim,
                "coeffs": [[x.to_json() for x in row] for row in self.matrix()]}

    @classmethod
    def from_json(cls, host: HopfPresentation, data: dict) -> "TensorSquareElement":
        N = host.F.n
        M = data["coeffs"] if isinstance(data, dict) else data
        if len(M) != host.dim or any(len(r) != host.dim for r in M):
            raise ValueError("tensor coefficient matrix has the wrong shape")
        return cls(host, {(i, j): scalar_from_json(x, N) for i, row in enumerate(M)
                          for j, x in enumerate(row)})

    @classmethod
    def one(cls, host: HopfPresentation) -> "TensorSquareElement":
        return cls(host, host.one2())


def tensor_mul(X: TensorSquareElement, Y: TensorSquareElement) -> TensorSquareElement:
    return X * Y


def tensor_flip(X: TensorSquareElement) -> TensorSquareElement:
    return X.flip()


def tensor_inv(X: TensorSquareElement) -> TensorSquareElement:
    return X.inverse()


def tensor_inv_raw(H: HopfPresentation, X: dict) -> dict:
    """Inverse in A⊗A from the minimal polynomial of left multiplication by X.

    If m(t) = t^d + ... + c_1 t + c_0 annihilates X with c_0 != 0 then
    X^{-1} = -(X^{d-1} + ... + c_1)/c_0. A zero constant term means X is singular.
    """
    F = H.F
    one = H.one2()
    mp = minimal_polynomial(lambda v: H.tmul(X, v), one, F)
    c0 = mp[0]
    if not c0:
        raise ZeroDivisionError("element of A⊗A is not invertible")
    # Horner: Y = X^{d-1} + c_{d-1} X^{d-2} + ... + c_1
    Y = {}
    for c in reversed(mp[1:]):
        Y = H.tmul(X, Y) if Y else {}
        Y = _add_scaled(Y, one, c)
    Y = vscale(Y, -(c0.inv()))
    if vsub(H.tmul(X, Y), one) or vsub(H.tmul(Y, X), one):
        raise ArithmeticError("tensor inverse failed verification")
    return Y


def _add_scaled(u: dict, v: dict, c) -> dict:
    out = dict(u)
    vaxpy(out, v, c)
    return out


# ---------------------------------------------------------------- verification

def verify_hopf(H: HopfPresentation, exhaustive: bool | None = None) -> Report:
    """Check every Hopf (super)algebra axiom exactly.

    Multiplicativity of Δ is checked on pairs (generator, basis element) and
    coassociativity on algebra generators unless `exhaustive`; this is a complete
    check because the elements satisfying either identity form a unital subalgebra
    once Δ(1) = 1⊗1 holds. Counit and antipode laws are checked on every basis element.
    """
    n, F = H.dim, H.F
    if exhaustive is None:
        exhaustive = n <= 16
    rep = Report(H.name or "hopf")
    rep.info["dim"] = n
    rep.info["super"] = H.is_super
    rep.extend(verify_algebra(H.algebra))
    if not rep.ok:
        return rep
    A = H.algebra
    if H.parity:
        par_ok = _check_parity(H)
        rep.check("structure maps are even", par_ok is None, par_ok)
    gens = list(range(n)) if exhaustive else algebra_generators(A)
    rep.info["checked_generators"] = gens
    one = A.unit
    # counit is an algebra map
    wit = None
    if H.eps(one) != 1:
        wit = "unit"
    else:
        for i in range(n):
            for j in range(n):
                if H.eps(A.table[i][j]) != H.counit[i] * H.counit[j]:
                    wit = (i, j)
                    break
            if wit:
                break
    rep.check("counit multiplicative", wit is None, wit)
    rep.check("comultiplication unital", not vsub(H.delta(one), H.one2()), "unit")
    wit = None
    for i in gens:
        di = H.comult[i]
        for j in range(n):
            if vsub(H.delta(A.table[i][j]), H.tmul(di, H.comult[j])):
                wit = (i, j)
                break
        if wit:
            break
    rep.check("comultiplication multiplicative", wit is None, wit)
    wit = None
    for i in gens:
        d = H.comult[i]
        if vsub(H.delta_left(d), H.delta_right(d)):
            wit = i
            break
    rep.check("coassociativity", wit is None, wit)
    wl = wr = None
    for i in range(n):
        left, right = {}, {}
        for (a, b), c in H.comult[i].items():
            ea, eb = H.counit[a], H.counit[b]
            if ea:
                vacc(left, b, c * ea)
            if eb:
                vacc(right, a, c * eb)
        e = {i: F.one}
        if wl is None and vsub(left, e):
            wl = i
        if wr is None and vsub(right, e):
            wr = i
    rep.check("counit law (ε⊗Id)Δ = Id", wl is None, wl)
    rep.check("counit law (Id⊗ε)Δ = Id", wr is None, wr)
    wl = wr = None
    for i in range(n):
        target = vscale(one, H.counit[i])
        left, right = {}, {}
        for (a, b), c in H.comult[i].items():
            vaxpy(left, A.mul(H.antipode[a], {b: F.one}), c)
            vaxpy(right, A.mul({a: F.one}, H.antipode[b]), c)
        if wl is None and vsub(left, target):
            wl = i
        if wr is None and vsub(right, target):
            wr = i
    rep.check("antipode m(S⊗Id)Δ = ηε", wl is None, wl)
    rep.check("antipode m(Id⊗S)Δ = ηε", wr is None, wr)
    return rep


def _check_parity(H: HopfPresentation):
    par = H.parity
    A = H.algebra
    for i in range(H.dim):
        for j in range(H.dim):
            for k in A.table[i][j]:
                if par[k] != (par[i] + par[j]) % 2:
                    return ("mult", i, j, k)
        for (a, b) in H.comult[i]:
            if (par[a] + par[b]) % 2 != par[i]:
                return ("comult", i, a, b)
        for k in H.antipode[i]:
            if par[k] != par[i]:
                return ("antipode", i, k)
        if par[i] and H.counit[i]:
            return ("counit", i)
    for k in A.unit:
        if par[k]:
            return ("unit", k)
    return None


def assert_hopf(H: HopfPresentation, exhaustive=None) -> HopfPresentation:
    rep = verify_hopf(H, exhaustive)
    if not rep.ok:
        raise AssertionError(f"Hopf axioms fail for {H.name or 'presentation'}: "
                             f"{[c.to_json() for c in rep.failures()]}")
    return H


# ---------------------------------------------------------------- constructions

def group_algebra(G: FiniteGroup, F: CyclotomicField, verify: bool = True) -> HopfPresentation:
    A = group_algebra_structure(G, F)
    H = HopfPresentation(A, [{(g, g): F.one} for g in G.elements], [F.one] * G.order,
                         [{G.inverse[g]: F.one} for g in G.elements], name=f"k[G] order {G.order}")
    return assert_hopf(H) if verify else H


def dual_hopf(H: HopfPresentation, verify: bool = True) -> HopfPresentation:
    """Dual basis e_i*: multiplication is the transpose of Δ, comultiplication of m."""
    if H.is_super:
        raise ValueError("duals of super presentations are not supported")
    n, F = H.dim, H.F
    table = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), c in H.comult[k].items():
            table[i][j][k] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    A = StructureAlgebra(F, table, unit)
    comult = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in H.algebra.table[i][j].items():
                comult[k][(i, j)] = c
    counit = [H.algebra.unit.get(i, F.zero) for i in range(n)]
    antipode = [dict() for _ in range(n)]
    for i in range(n):
        for j, c in H.antipode[i].items():
            antipode[j][i] = c
    D = HopfPresentation(A, comult, counit, antipode, name=f"dual of {H.name}" if H.name else "dual")
    return assert_hopf(D) if verify else D


def presentations_equal(H1: HopfPresentation, H2: HopfPresentation) -> bool:
    if H1.dim != H2.dim or H1.F is not H2.F:
        return False
    A1, A2 = H1.algebra, H2.algebra
    return (all(not vsub(A1.table[i][j], A2.table[i][j]) for i in range(H1.dim) for j in range(H1.dim))
            and not vsub(A1.unit, A2.unit)
            and all(not vsub(a, b) for a, b in zip(H1.comult, H2.comult))
            and H1.counit == H2.counit
            and all(not vsub(a, b) for a, b in zip(H1.antipode, H2.antipode))
            and (H1.parity or None) == (H2.parity or None))


class GroupLikeSet:
    def __init__(self, H: HopfPresentation, elements: list[dict]):
        self.host = H
        self.elements = elements

    def __len__(self):
        return len(self.elements)

    def index_of(self, x: dict) -> int | None:
        for t, g in enumerate(self.elements):
            if not vsub(g, x):
                return t
        return None

    def is_group(self) -> bool:
        H = self.host
        for g in self.elements:
            if self.index_of(H.S(g)) is None:
                return False
            for h in self.elements:
                if self.index_of(H.mul(g, h)) is None:
                    return False
        return self.index_of(H.one()) is not None

    def as_basis_indices(self) -> list[int] | None:
        out = []
        for g in self.elements:
            if len(g) != 1 or next(iter(g.values())) != 1:
                return None
            out.append(next(iter(g)))
        return sorted(out)


def grouplikes(H: HopfPresentation) -> GroupLikeSet:
    """Grouplikes of H as algebra maps H* -> k, read off the 1-dim blocks of the dual algebra."""
    D = dual_hopf(H, verify=False)
    out = []
    for chi in characters(D.algebra):
        g = {i: c for i, c in enumerate(chi) if c}
        if H.eps(g) != 1 or vsub(H.delta(g), {(a, b): x * y for a, x in g.items() for b, y in g.items()}):
            raise ArithmeticError("character of the dual failed to give a grouplike")
        out.append(g)
    out.sort(key=lambda g: sorted(g))
    return GroupLikeSet(H, out)


def grouplike_count(H: HopfPresentation) -> int:
    """Number of grouplikes over the algebraic closure: 1-dim blocks of the dual algebra."""
    from .algebra import block_profile
    return block_profile(dual_hopf(H, verify=False).algebra).ones()


def skew_primitives(H: HopfPresentation, g: dict, h: dict) -> list[dict]:
    """Basis of {x : Δ(x) = x⊗g + h⊗x}."""
    F = H.F
    n = H.dim
    cols = []
    for i in range(n):
        d = dict(H.comult[i])
        for a, c in g.items():
            vacc(d, (i, a), -c)
        for a, c in h.items():
            vacc(d, (a, i), -c)
        cols.append(d)
    rows: dict = {}
    for i, col in enumerate(cols):
        for key, c in col.items():
            rows.setdefault(key, {})[i] = c
    return Span(F, nullspace(list(rows.values()), list(range(n)), F)).basis()


def check_hopf_map(f: list[dict], H1: HopfPresentation, H2: HopfPresentation,
                   name: str = "hopf map") -> Report:
    """f[i] = image of basis element i of H1 in H2; checks algebra, coalgebra and counit maps."""
    rep = Report(name)

    def app(x: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            vaxpy(out, f[i], c)
        return out

    def app2(X: dict) -> dict:
        out: dict = {}
        for (i, j), c in X.items():
            for a, x in f[i].items():
                for b, y in f[j].items():
                    vacc(out, (a, b), c * x * y)
        return out

    n = H1.dim
    rep.check("unit preserved", not vsub(app(H1.one()), H2.one()))
    wit = next(((i, j) for i in range(n) for j in range(n)
                if vsub(app(H1.algebra.table[i][j]), H2.mul(f[i], f[j]))), None)
    rep.check("multiplicative", wit is None, wit)
    wit = next((i for i in range(n) if vsub(H2.delta(f[i]), app2(H1.comult[i]))), None)
    rep.check("comultiplicative", wit is None, wit)
    wit = next((i for i in range(n) if H2.eps(f[i]) != H1.counit[i]), None)
    rep.check("counit preserved", wit is None, wit)
    rep.check("bijective", Span(H1.F, f).dim == n == H2.dim)
    return rep


# ---------------------------------------------------------------- sub-Hopf algebras

def _tensor_coords(span: Span, pos: dict, X: dict):
    """Coordinates of X ∈ B⊗B against the echelon basis of B, or None if X ∉ B⊗B."""
    by_right: dict = {}
    for (i, j), c in X.items():
        by_right.setdefault(j, {})[i] = c
    mid: dict = {}
    for j, col in by_right.items():
        if not span.contains(col):
            return None
        for p, c in span.coords(col).items():
            mid.setdefault(pos[p], {})[j] = c
    out = {}
    for a, row in mid.items():
        if not span.contains(row):
            return None
        for p, c in span.coords(row).items():
            out[(a, pos[p])] = c
    return out


class SubHopf:
    """A sub-Hopf algebra B ⊂ H with its own presentation and the inclusion."""

    def __init__(self, H: HopfPresentation, basis: list[dict]):
        from .algebra import subalgebra
        A, span = subalgebra(H.algebra, basis)
        self.parent = H
        self.span = span
        self.pos = {p: t for t, p in enumerate(span.pivots())}
        self.basis = span.basis()
        comult, antipode = [], []
        for t, b in enumerate(self.basis):
            d = _tensor_coords(span, self.pos, H.delta(b))
            if d is None:
                raise ValueError(f"subalgebra is not closed under Δ (basis vector {t})")
            comult.append(d)
            s = H.S(b)
            if not span.contains(s):
                raise ValueError(f"subalgebra is not closed under S (basis vector {t})")
            antipode.append(self.coords(s))
        counit = [H.eps(b) for b in self.basis]
        parity = None
        if H.parity:
            parity = [H.homogeneous_parity(b) for b in self.basis]
            if None in parity:
                raise ValueError("sub-Hopf basis is not homogeneous")
        self.hopf = HopfPresentation(A, comult, counit, antipode, parity=parity,
                                     name=f"sub-Hopf of {H.name}" if H.name else "sub-Hopf")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: dict) -> dict:
        return {self.pos[p]: c for p, c in self.span.coords(v).items()}

    def tensor_coords(self, X: dict):
        return _tensor_coords(self.span, self.pos, X)

    def include(self, v: dict) -> dict:
        out: dict = {}
        for t, c in v.items():
            vaxpy(out, self.basis[t], c)
        return out


def co_opposite(H: HopfPresentation) -> HopfPresentation:
    """H^cop: flipped comultiplication and inverse antipode."""
    from .linalg import mat_inverse
    Sinv = mat_inverse(H.antipode_matrix(), H.F)
    n = H.dim
    antipode = [{i: Sinv[i][j] for i in range(n) if Sinv[i][j]} for j in range(n)]
    return HopfPresentation(H.algebra, [H.flip(d) for d in H.comult], H.counit, antipode,
                            parity=H.parity, name=f"{H.name} cop" if H.name else "cop")
