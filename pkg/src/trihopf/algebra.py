"""Finite-dimensional associative algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .group import FiniteGroup, TwoCocycle
from .linalg import (NonSplitError, Span, charpoly, from_dense, mat_identity, mat_mul,
                     minimal_polynomial, nullspace, poly_eval, roots_in_field,
                     squarefree_decomposition, vacc, vaxpy, vscale, vsub)
from .report import Report
from .scalar import Cyc, CyclotomicField, scalar_from_json


class StructureAlgebra:
    """Algebra with basis e_0..e_{n-1}; table[i][j] is the sparse vector e_i e_j."""

    def __init__(self, F: CyclotomicField, table, unit: dict, names=None):
        self.F = F
        self.dim = len(table)
        self.table = [[{k: c for k, c in entry.items() if c} for entry in row] for row in table]
        self.unit = {k: c for k, c in unit.items() if c}
        self.names = list(names) if names is not None else None
        self._traces = None

    # ---- construction helpers
    @classmethod
    def from_dense(cls, F: CyclotomicField, mult, unit, names=None) -> "StructureAlgebra":
        n = len(mult)
        table = [[from_dense([F.coerce(x) for x in mult[i][j]]) for j in range(n)] for i in range(n)]
        return cls(F, table, from_dense([F.coerce(x) for x in unit]), names)

    def mult_tensor(self) -> list:
        n, z = self.dim, self.F.zero
        return [[[self.table[i][j].get(k, z) for k in range(n)] for j in range(n)] for i in range(n)]

    def basis_vector(self, i: int) -> dict:
        return {i: self.F.one}

    def one(self) -> dict:
        return dict(self.unit)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else f"e{i}"

    # ---- arithmetic on sparse vectors
    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        T = self.table
        for i, a in x.items():
            Ti = T[i]
            for j, b in y.items():
                e = Ti[j]
                if e:
                    ab = a * b
                    for k, c in e.items():
                        vacc(out, k, ab * c)
        return out

    def power(self, x: dict, k: int) -> dict:
        r = self.one()
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def left_matrix(self, x: dict) -> list:
        """Matrix of y -> x y (column j is x e_j)."""
        n = self.dim
        M = [[self.F.zero] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.mul(x, {j: self.F.one}).items():
                M[k][j] = c
        return M

    def traces(self) -> list[Cyc]:
        """tr(L_{e_k}) for every basis element."""
        if self._traces is None:
            z = self.F.zero
            self._traces = [sum((self.table[k][i].get(i, z) for i in range(self.dim)), z)
                            for k in range(self.dim)]
        return self._traces

    def trace(self, x: dict) -> Cyc:
        t = self.traces()
        return sum((c * t[k] for k, c in x.items()), self.F.zero)

    def inverse(self, x: dict) -> dict:
        """Two-sided inverse of x, by a linear solve of x y = 1."""
        n, F = self.dim, self.F
        cols = [self.mul(x, {j: F.one}) for j in range(n)]
        rows = [dict() for _ in range(n)]
        for j, col in enumerate(cols):
            for k, c in col.items():
                rows[k][j] = c
        from .linalg import solve
        y = solve(rows, [self.unit.get(k, F.zero) for k in range(n)], list(range(n)), F)
        if y is None or vsub(self.mul(y, x), self.unit):
            raise ZeroDivisionError("element is not invertible")
        return y

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i))

    def to_json(self) -> dict:
        return {"dim": self.dim, "conductor": self.F.n,
                "mult": [[[x.to_json() for x in e] for e in row] for row in self.mult_tensor()],
                "unit": [self.unit.get(k, self.F.zero).to_json() for k in range(self.dim)]}

    @classmethod
    def from_json(cls, data: dict) -> "StructureAlgebra":
        F = CyclotomicField(int(data.get("conductor", 1)))
        n = int(data["dim"])
        mult = [[[scalar_from_json(x, F.n) for x in e] for e in row] for row in data["mult"]]
        if len(mult) != n or any(len(r) != n or any(len(e) != n for e in r) for r in mult):
            raise ValueError("mult must be a dim x dim x dim array")
        unit = [scalar_from_json(x, F.n) for x in data["unit"]]
        return cls.from_dense(F, mult, unit)


@dataclass(frozen=True)
class BlockProfile:
    dims: tuple
    radical_dim: int = 0

    @property
    def count(self) -> int:
        return len(self.dims)

    def ones(self) -> int:
        return sum(1 for d in self.dims if d == 1)

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "radical_dim": self.radical_dim}


class AlgebraRepresentation:
    """Left module: action[i] is the matrix of e_i on a space of dimension dim_v."""

    def __init__(self, algebra: StructureAlgebra, action: list):
        self.algebra = algebra
        self.action = action
        self.dim_v = len(action[0]) if action else 0

    def matrix(self, x: dict) -> list:
        F = self.algebra.F
        M = [[F.zero] * self.dim_v for _ in range(self.dim_v)]
        for i, c in x.items():
            A = self.action[i]
            for r in range(self.dim_v):
                for s in range(self.dim_v):
                    if A[r][s]:
                        M[r][s] = M[r][s] + c * A[r][s]
        return M

    def verify(self) -> Report:
        rep = Report("representation")
        A, F = self.algebra, self.algebra.F
        rep.check("unit acts as identity", self.matrix(A.unit) == mat_identity(self.dim_v, F))
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = mat_mul(self.action[i], self.action[j], F)
                if lhs != self.matrix(A.table[i][j]):
                    rep.check("action respects products", False, (i, j))
                    return rep
        rep.check("action respects products", True)
        return rep


def regular_representation(A: StructureAlgebra) -> AlgebraRepresentation:
    return AlgebraRepresentation(A, [A.left_matrix({i: A.F.one}) for i in range(A.dim)])


# ---------------------------------------------------------------- verification

def verify_algebra(A: StructureAlgebra) -> Report:
    rep = Report("algebra")
    n = A.dim
    one = A.unit
    left = right = None
    for i in range(n):
        e = {i: A.F.one}
        if left is None and vsub(A.mul(one, e), e):
            left = i
        if right is None and vsub(A.mul(e, one), e):
            right = i
    rep.check("left unit", left is None, left)
    rep.check("right unit", right is None, right)
    T = A.table
    wit = None
    for i in range(n):
        for j in range(n):
            ij = T[i][j]
            for k in range(n):
                lhs = A.mul(ij, {k: A.F.one})
                rhs = A.mul({i: A.F.one}, T[j][k])
                if lhs != rhs:
                    wit = (i, j, k)
                    break
            if wit:
                break
        if wit:
            break
    rep.check("associativity", wit is None, wit)
    return rep


# ---------------------------------------------------------------- subspaces and subalgebras

class SubalgebraBuilder:
    """Incremental closure of a unital subalgebra under multiplication."""

    def __init__(self, A: StructureAlgebra):
        self.A = A
        self.span = Span(A.F)
        self.elems: list[dict] = []
        self._push(A.one())

    def _push(self, v: dict) -> None:
        queue = []
        if self.span.add(v):
            queue.append(v)
        while queue:
            x = queue.pop()
            self.elems.append(x)
            for y in list(self.elems):
                for p in (self.A.mul(x, y), self.A.mul(y, x)):
                    if p and self.span.add(p):
                        queue.append(p)

    def add(self, v: dict) -> bool:
        if self.span.contains(v):
            return False
        self._push(v)
        return True

    @property
    def dim(self) -> int:
        return self.span.dim

    def basis(self) -> list[dict]:
        return self.span.basis()


def generated_subalgebra(A: StructureAlgebra, S) -> list[dict]:
    """Echelon basis of the smallest unital subalgebra containing S."""
    b = SubalgebraBuilder(A)
    for v in S:
        b.add(v)
    return b.basis()


def algebra_generators(A: StructureAlgebra) -> list[int]:
    """Basis indices that generate A, chosen greedily in index order."""
    b = SubalgebraBuilder(A)
    gens = []
    for i in range(A.dim):
        if b.dim == A.dim:
            break
        if b.add({i: A.F.one}):
            gens.append(i)
    return gens


def subalgebra(A: StructureAlgebra, basis: list[dict]) -> tuple[StructureAlgebra, Span]:
    """Structure constants of a subalgebra in the given echelon basis (rows of a Span)."""
    S = Span(A.F, basis)
    rows = S.basis()
    piv = S.pivots()
    pos = {p: t for t, p in enumerate(piv)}

    def coords(v: dict) -> dict:
        return {pos[p]: c for p, c in S.coords(v).items()}

    table = [[coords(A.mul(x, y)) for y in rows] for x in rows]
    return StructureAlgebra(A.F, table, coords(A.unit)), S


def jacobson_radical(A: StructureAlgebra) -> list[dict]:
    """Kernel of the trace form (a, b) -> tr(L_ab); equals Rad(A) in characteristic 0."""
    t = A.traces()
    n = A.dim
    rows = []
    for i in range(n):
        row = {}
        for j in range(n):
            s = A.F.zero
            for k, c in A.table[i][j].items():
                if t[k]:
                    s = s + c * t[k]
            if s:
                row[j] = s
        rows.append(row)
    return Span(A.F, nullspace(rows, list(range(n)), A.F)).basis()


def quotient(A: StructureAlgebra, ideal: list[dict]):
    """A / I for a two-sided ideal I; returns (B, q) with q the projection on sparse vectors."""
    S = Span(A.F, ideal)
    keep = [i for i in range(A.dim) if i not in S.rows]
    pos = {i: t for t, i in enumerate(keep)}

    def q(v: dict) -> dict:
        r = S.reduce(v)
        return {pos[i]: c for i, c in r.items()}

    table = [[q(A.table[a][b]) for b in keep] for a in keep]
    names = [A.name(i) for i in keep] if A.names else None
    return StructureAlgebra(A.F, table, q(A.unit), names), q


def semisimple_quotient(A: StructureAlgebra):
    rad = jacobson_radical(A)
    if not rad:
        return A, (lambda v: dict(v)), 0
    B, q = quotient(A, rad)
    return B, q, len(rad)


def center(A: StructureAlgebra) -> list[dict]:
    gens = algebra_generators(A)
    rows = []
    for g in gens:
        eg = {g: A.F.one}
        cols = [vsub(A.mul({i: A.F.one}, eg), A.mul(eg, {i: A.F.one})) for i in range(A.dim)]
        for k in range(A.dim):
            row = {i: col[k] for i, col in enumerate(cols) if k in col}
            if row:
                rows.append(row)
    return Span(A.F, nullspace(rows, list(range(A.dim)), A.F)).basis()


def _candidates(Z: list[dict], F: CyclotomicField):
    m = len(Z)
    for z in Z:
        yield z
    for i in range(m):
        for j in range(i + 1, m):
            yield _vsum(Z[i], Z[j])
    # deterministic integer combinations once plain sums are exhausted
    for k in range(1, 4):
        acc: dict = {}
        for i, z in enumerate(Z):
            vaxpy(acc, z, F((i + 1) ** k))
        yield acc


def _vsum(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        vacc(out, k, x)
    return out


def central_idempotents(B: StructureAlgebra, Z: list[dict] | None = None) -> list[dict]:
    """Primitive central idempotents of a semisimple algebra whose center splits over the field."""
    F = B.F
    if Z is None:
        Z = center(B)
    m = len(Z)
    if m == 1:
        return [B.one()]

    def zdim(e):
        return Span(F, [B.mul(e, z) for z in Z]).dim

    pieces = [(B.one(), m)]
    for z in _candidates(Z, F):
        if all(d == 1 for _, d in pieces):
            break
        new = []
        for e, d in pieces:
            if d == 1:
                new.append((e, d))
                continue
            ze = B.mul(z, e)
            mp = minimal_polynomial(lambda v: B.mul(z, v), e, F)
            if len(mp) <= 2:
                new.append((e, d))
                continue
            roots = roots_in_field(mp, F)
            for lam in roots:
                f = dict(e)
                for mu in roots:
                    if mu is lam or mu == lam:
                        continue
                    f = vscale(vsub(B.mul(ze, f), vscale(f, mu)), (lam - mu).inv())
                new.append((f, zdim(f)))
        pieces = new
    if any(d != 1 for _, d in pieces):
        raise RuntimeError("central elements failed to separate the blocks")
    return [e for e, _ in pieces]


def block_profile(A: StructureAlgebra) -> BlockProfile:
    """Matrix block sizes of A/Rad(A), via primitive central idempotents."""
    B, _, rdim = semisimple_quotient(A)
    dims = []
    for e in central_idempotents(B):
        t = B.trace(e)
        if not t.is_integer():
            raise NonSplitError()
        size = int(t.to_fraction())
        d = isqrt(size)
        if d * d != size:
            raise NonSplitError(f"block of dimension {size} is not a full matrix algebra; enlarge conductor")
        dims.append(d)
    return BlockProfile(tuple(sorted(dims)), rdim)


def block_profile_closure(A: StructureAlgebra) -> BlockProfile:
    """Independent route: squarefree decomposition of the characteristic polynomial of a
    separating central element on A/Rad. Needs no eigenvalues, so works over any conductor."""
    B, _, rdim = semisimple_quotient(A)
    Z = center(B)
    for z in _candidates(Z, B.F):
        cp = charpoly(B.left_matrix(z), B.F)
        parts = squarefree_decomposition(cp)
        distinct = sum(len(p) - 1 for p in parts.values())
        if distinct == len(Z):
            dims = []
            for k, p in parts.items():
                d = isqrt(k)
                if d * d != k:
                    break
                dims += [d] * (len(p) - 1)
            else:
                return BlockProfile(tuple(sorted(dims)), rdim)
    raise RuntimeError("no separating central element found")


def characters(A: StructureAlgebra) -> list[list[Cyc]]:
    """All algebra homomorphisms A -> field, as value lists on the basis (1-dim blocks)."""
    B, q, _ = semisimple_quotient(A)
    out = []
    for e in central_idempotents(B):
        if B.trace(e) != 1:
            continue
        k = min(e)
        vals = []
        for i in range(A.dim):
            be = B.mul(q({i: A.F.one}), e)
            vals.append(be.get(k, A.F.zero) / e[k])
        out.append(vals)
    return out


# ---------------------------------------------------------------- standard algebras

def group_algebra_structure(G: FiniteGroup, F: CyclotomicField) -> StructureAlgebra:
    table = [[{G.table[a][b]: F.one} for b in G.elements] for a in G.elements]
    return StructureAlgebra(F, table, {0: F.one}, names=G.names)


def twisted_group_algebra(H: FiniteGroup, c: TwoCocycle) -> StructureAlgebra:
    """Basis X_g with X_g X_h = c(g,h) X_gh."""
    F = c.field
    table = [[{H.table[a][b]: c(a, b)} for b in H.elements] for a in H.elements]
    return StructureAlgebra(F, table, {0: F.one}, names=H.names)


def tensor_product_algebra(A: StructureAlgebra, B: StructureAlgebra) -> StructureAlgebra:
    """A ⊗ B with basis index i*dim(B) + j."""
    m = B.dim
    table = []
    for a in range(A.dim * m):
        row = []
        i1, j1 = divmod(a, m)
        for b in range(A.dim * m):
            i2, j2 = divmod(b, m)
            out = {}
            for k, x in A.table[i1][i2].items():
                for l, y in B.table[j1][j2].items():
                    out[k * m + l] = x * y
            row.append(out)
        table.append(row)
    unit = {k * m + l: x * y for k, x in A.unit.items() for l, y in B.unit.items()}
    return StructureAlgebra(A.F, table, unit)


def opposite_algebra(A: StructureAlgebra) -> StructureAlgebra:
    return StructureAlgebra(A.F, [[A.table[j][i] for j in range(A.dim)] for i in range(A.dim)],
                            A.unit, A.names)


# ---------------------------------------------------------------- simple modules

def primitive_idempotent(B: StructureAlgebra, e: dict | None = None) -> dict:
    """A primitive idempotent below e (default 1) in a semisimple algebra that splits.

    Repeatedly splits e with an eigen-idempotent of an element of the corner eBe until the
    corner is one-dimensional.
    """
    F = B.F
    e = B.one() if e is None else dict(e)
    while True:
        corner = Span(F, [B.mul(B.mul(e, {i: F.one}), e) for i in range(B.dim)]).basis()
        if len(corner) == 1:
            return e
        for z in _candidates(corner, F):
            mp = minimal_polynomial(lambda v: B.mul(z, v), e, F)
            if len(mp) <= 2:
                continue
            roots = roots_in_field(mp, F)
            if len(roots) != len(mp) - 1:
                continue
            lam = roots[0]
            f = dict(e)
            for mu in roots[1:]:
                f = vscale(vsub(B.mul(z, f), vscale(f, mu)), (lam - mu).inv())
            e = f
            break
        else:
            raise NonSplitError("corner algebra did not split; enlarge conductor")


def simple_modules(A: StructureAlgebra) -> list[AlgebraRepresentation]:
    """One simple module per block of A/Rad(A), realized as B·f for a primitive idempotent f."""
    B, q, _ = semisimple_quotient(A)
    F = A.F
    out = []
    for e in central_idempotents(B):
        f = primitive_idempotent(B, e)
        span = Span(F, [B.mul({i: F.one}, f) for i in range(B.dim)])
        basis = span.basis()
        pos = {p: t for t, p in enumerate(span.pivots())}
        n = len(basis)
        action = []
        for i in range(A.dim):
            qa = q({i: F.one})
            M = [[F.zero] * n for _ in range(n)]
            for s, b in enumerate(basis):
                for p, c in span.coords(B.mul(qa, b)).items():
                    M[pos[p]][s] = c
            action.append(M)
        out.append(AlgebraRepresentation(A, action))
    return out
