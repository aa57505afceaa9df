"""Exact linear algebra over a cyclotomic field.

Vectors are sparse dicts {index: Cyc} with no zero entries; indices may be any
hashable, orderable keys (ints or tuples). Dense matrices are lists of rows.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import mpmath

from .scalar import Cyc, CyclotomicField


class NonSplitError(ArithmeticError):
    """An eigenvalue needed for a splitting does not lie in the ground field."""

    def __init__(self, msg: str = "algebra does not split over this field; enlarge conductor"):
        super().__init__(msg)


# ---------------------------------------------------------------- sparse vectors

def vadd(u: dict, v: dict, c=None) -> dict:
    """u + c*v as a new dict."""
    out = dict(u)
    for k, x in v.items():
        if c is not None:
            x = x * c
        y = out.get(k)
        if y is None:
            out[k] = x
        else:
            s = y + x
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def vaxpy(acc: dict, v: dict, c) -> None:
    """In place acc += c*v."""
    for k, x in v.items():
        x = x * c
        y = acc.get(k)
        if y is None:
            acc[k] = x
        else:
            s = y + x
            if s:
                acc[k] = s
            else:
                del acc[k]


def vacc(acc: dict, k, x) -> None:
    y = acc.get(k)
    if y is None:
        if x:
            acc[k] = x
    else:
        s = y + x
        if s:
            acc[k] = s
        else:
            del acc[k]


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vsub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = -x
        else:
            s = y - x
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def vclean(v: dict) -> dict:
    return {k: x for k, x in v.items() if x}


def vdiff_witness(u: dict, v: dict):
    """First key (sorted) where u and v differ, or None."""
    keys = sorted(set(u) | set(v))
    for k in keys:
        a, b = u.get(k), v.get(k)
        if (a or 0) != (b or 0):
            return k
    return None


def to_dense(v: dict, n: int, F: CyclotomicField) -> list:
    return [v.get(i, F.zero) for i in range(n)]


def from_dense(vals) -> dict:
    return {i: x for i, x in enumerate(vals) if x}


# ---------------------------------------------------------------- echelon spans

class Span:
    """Row space kept in reduced row echelon form.

    Each stored row has a 1 at its pivot and zeros at every other pivot.
    """

    def __init__(self, F: CyclotomicField, vectors=()):
        self.F = F
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c:
                vaxpy(v, self.rows[p], -c)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inv()
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                vaxpy(row, r, -c)
        self.rows[p] = r
        return True

    def coords(self, v: dict) -> dict:
        """Coordinates of v against the stored rows, keyed by pivot. v must lie in the span."""
        c = {p: v[p] for p in v if p in self.rows}
        check = {}
        for p, x in c.items():
            vaxpy(check, self.rows[p], x)
        if vsub(check, v):
            raise ValueError("vector is not in the span")
        return c


def rank(vectors, F: CyclotomicField) -> int:
    return Span(F, vectors).dim


def nullspace(rows, columns, F: CyclotomicField) -> list[dict]:
    """Basis of {x : row . x = 0 for all rows}, x indexed by `columns`."""
    S = Span(F, rows)
    free = [c for c in columns if c not in S.rows]
    out = []
    for f in free:
        x = {f: F.one}
        for p, row in S.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


def solve(rows, rhs, columns, F: CyclotomicField):
    """One solution x of rows . x = rhs (rhs a list of scalars), or None."""
    aug = []
    tag = ("__rhs__",)
    for r, b in zip(rows, rhs):
        a = dict(r)
        if b:
            a[tag] = b
        aug.append(a)
    # make sure the rhs column is never chosen as pivot unless inconsistent
    S = _PivotSpan(F, exclude=tag)
    for a in aug:
        S.add(a)
    if tag in S.rows:
        return None
    x = {}
    for p, row in S.rows.items():
        b = row.get(tag)
        if b:
            x[p] = b
    return x


class _PivotSpan(Span):
    def __init__(self, F, exclude):
        super().__init__(F)
        self.exclude = exclude

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        keys = [k for k in r if k != self.exclude]
        p = min(keys) if keys else self.exclude
        inv = r[p].inv()
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                vaxpy(row, r, -c)
        self.rows[p] = r
        return True


# ---------------------------------------------------------------- dense matrices

def mat_zero(r: int, c: int, F) -> list:
    return [[F.zero] * c for _ in range(r)]


def mat_identity(n: int, F) -> list:
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def mat_mul(A: list, B: list, F) -> list:
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = [F.zero] * p
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    b = Bk[j]
                    if b:
                        row[j] = row[j] + a * b
        out.append(row)
    return out


def mat_transpose(A: list) -> list:
    return [list(r) for r in zip(*A)] if A else []


def mat_rank(A: list, F) -> int:
    return rank([from_dense(r) for r in A], F)


def mat_det(A: list, F) -> Cyc:
    n = len(A)
    M = [list(r) for r in A]
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        p = M[c][c]
        det = det * p
        inv = p.inv()
        for r in range(c + 1, n):
            f = M[r][c]
            if f:
                f = f * inv
                Mr, Mc = M[r], M[c]
                for k in range(c, n):
                    if Mc[k]:
                        Mr[k] = Mr[k] - f * Mc[k]
    return det


def mat_inverse(A: list, F) -> list:
    n = len(A)
    M = [list(A[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = M[c][c].inv()
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def charpoly(A: list, F) -> list:
    """Characteristic polynomial det(tI - A), coefficients lowest degree first.

    Hessenberg reduction followed by the standard recurrence.
    """
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = H[m][m - 1].inv()
        for i in range(m + 1, n):
            t = H[i][m - 1]
            if t:
                t = t * inv
                H[i] = [x - t * y for x, y in zip(H[i], H[m])]
                for row in H:
                    if row[i]:
                        row[m] = row[m] + t * row[i]
    # p[k] = charpoly of leading k x k block
    p = [[F.one]]
    for k in range(1, n + 1):
        # (t - h_kk) p_{k-1}
        prev = p[k - 1]
        cur = poly_sub(poly_shift(prev), poly_scale(prev, H[k - 1][k - 1]))
        prodsub = F.one
        for i in range(1, k):
            prodsub = prodsub * H[k - i][k - i - 1]
            if not prodsub:
                break
            coef = H[k - i - 1][k - 1] * prodsub
            if coef:
                cur = poly_sub(cur, poly_scale(p[k - i - 1], coef))
        p.append(cur)
    return poly_trim(p[n])


# ---------------------------------------------------------------- polynomials

def poly_trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def poly_shift(p: list) -> list:
    return [p[0].field.zero] + list(p)


def poly_scale(p: list, c) -> list:
    return [x * c for x in p]


def poly_add(a: list, b: list) -> list:
    F = (a or b)[0].field
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else F.zero) + (b[i] if i < len(b) else F.zero)
                      for i in range(n)])


def poly_sub(a: list, b: list) -> list:
    return poly_add(a, [-x for x in b])


def poly_mul(a: list, b: list) -> list:
    F = a[0].field
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_is_zero(p: list) -> bool:
    return len(p) == 1 and not p[0]


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    F = a[0].field
    a = list(a)
    db = len(b) - 1
    if poly_is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) - 1 < db:
        return [F.zero], poly_trim(a)
    inv = b[-1].inv()
    q = [F.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c * inv
            q[i - db] = c
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] = a[i - db + j] - c * b[j]
    return poly_trim(q), poly_trim(a[:db] or [F.zero])


def poly_monic(p: list) -> list:
    inv = p[-1].inv()
    return [x * inv for x in p]


def poly_gcd(a: list, b: list) -> list:
    while not poly_is_zero(b):
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_deriv(p: list) -> list:
    F = p[0].field
    if len(p) == 1:
        return [F.zero]
    return poly_trim([p[k] * k for k in range(1, len(p))])


def poly_eval(p: list, x):
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


def squarefree_decomposition(p: list) -> dict[int, list]:
    """{k: P_k} with p = lead * prod P_k^k, each P_k squarefree and coprime (Yun)."""
    p = poly_monic(p)
    out = {}
    a = p
    b = poly_deriv(a)
    c = poly_gcd(a, b) if not poly_is_zero(b) else a
    w = poly_divmod(a, c)[0]
    y = poly_divmod(b, c)[0] if not poly_is_zero(b) else b
    k = 1
    while len(w) > 1:
        z = poly_sub(y, poly_deriv(w))
        g = poly_gcd(w, z) if not poly_is_zero(z) else w
        if len(g) > 1:
            out[k] = g
        w = poly_divmod(w, g)[0]
        y = poly_divmod(z, g)[0] if not poly_is_zero(z) else z
        k += 1
    return out


# ---------------------------------------------------------------- roots in K

def roots_in_field(p: list, F: CyclotomicField) -> list:
    """All roots in F of the squarefree polynomial p; NonSplitError if some root is outside F.

    Candidate roots come from high precision complex roots of every Galois
    conjugate of p; each candidate is certified by exact evaluation.
    """
    p = poly_monic(poly_trim(p))
    d = len(p) - 1
    if d == 0:
        return []
    if d == 1:
        return [-p[0]]
    n, phi = F.n, F.phi
    emb = F.embeddings() if n > 2 else [1]
    reps = [j for j in emb if n <= 2 or j <= n - j]
    found = []
    for dps in (40, 80, 160):
        with mpmath.workdps(dps):
            numeric = {j: _numeric_roots(p, j, F) for j in reps}
            zeta = mpmath.exp(2j * mpmath.pi / n)
            rows = [[zeta ** (j * k) for k in range(phi)] for j in emb]
            Vinv = mpmath.inverse(mpmath.matrix(rows)) if phi > 1 else None
            found = []
            seen = set()
            for choice in product(*[range(d) for _ in reps]):
                vals = {}
                for j, ci in zip(reps, choice):
                    vals[j] = numeric[j][ci]
                    if n > 2:
                        vals[n - j] = mpmath.conj(numeric[j][ci])
                if phi == 1:
                    coords = [mpmath.re(vals[1])]
                else:
                    rhs = mpmath.matrix([vals[j] for j in emb])
                    sol = Vinv * rhs
                    coords = [sol[k] for k in range(phi)]
                    if any(abs(mpmath.im(c)) > mpmath.mpf(10) ** (-dps // 3) for c in coords):
                        continue
                    coords = [mpmath.re(c) for c in coords]
                fr = [Fraction(mpmath.nstr(c, dps, strip_zeros=False)).limit_denominator(10 ** (dps // 3))
                      for c in coords]
                cand = F.from_coeffs(fr)
                if cand in seen:
                    continue
                if not poly_eval(p, cand):
                    seen.add(cand)
                    found.append(cand)
                    if len(found) == d:
                        return found
    raise NonSplitError(f"only {len(found)} of {d} eigenvalues lie in Q(zeta_{n}); enlarge conductor")


def _numeric_roots(p: list, j: int, F: CyclotomicField):
    coeffs = [_to_mp(c.galois(j), F) for c in reversed(p)]
    try:
        return mpmath.polyroots(coeffs, maxsteps=500, extraprec=4 * mpmath.mp.dps)
    except mpmath.libmp.libhyper.NoConvergence:
        return mpmath.polyroots(coeffs, maxsteps=5000, extraprec=8 * mpmath.mp.dps)


def _to_mp(c: Cyc, F: CyclotomicField):
    zeta = mpmath.exp(2j * mpmath.pi / F.n)
    return sum((mpmath.mpf(x) * zeta ** k for k, x in enumerate(c.num) if x), mpmath.mpc(0)) / c.den


# ---------------------------------------------------------------- Krylov

def minimal_polynomial(apply, start: dict, F: CyclotomicField, limit: int | None = None) -> list:
    """Monic minimal polynomial of the linear map `apply` on the cyclic subspace of `start`.

    Returned lowest degree first.
    """
    rows: dict = {}   # pivot -> (vec, comb)
    v = dict(start)
    k = 0
    while True:
        comb = {k: F.one}
        vec = dict(v)
        for p in [q for q in vec if q in rows]:
            c = vec.get(p)
            if c:
                rv, rc = rows[p]
                vaxpy(vec, rv, -c)
                vaxpy(comb, rc, -c)
        if not vec:
            poly = [comb.get(i, F.zero) for i in range(k + 1)]
            return poly_monic(poly)
        p = min(vec)
        inv = vec[p].inv()
        vec = vscale(vec, inv)
        comb = vscale(comb, inv)
        for q, (rv, rc) in rows.items():
            c = rv.get(p)
            if c:
                vaxpy(rv, vec, -c)
                vaxpy(rc, comb, -c)
        rows[p] = (vec, comb)
        k += 1
        if limit is not None and k > limit:
            raise RuntimeError("minimal polynomial degree exceeds limit")
        v = apply(v)
