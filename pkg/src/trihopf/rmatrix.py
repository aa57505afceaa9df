"""Quasitriangular structures: axioms, Drinfeld element, R_u, minimal part."""
from __future__ import annotations

from .algebra import algebra_generators, generated_subalgebra
from .hopf import (HopfPresentation, SubHopf, TensorSquareElement, check_hopf_map,
                   co_opposite, dual_hopf, tensor_inv_raw, verify_hopf)
from .linalg import Span, mat_rank, vaxpy, vscale, vsub
from .report import Report


def _coeffs(R) -> dict:
    return R.coeffs if isinstance(R, TensorSquareElement) else R


def r_inverse(H: HopfPresentation, R) -> dict:
    """Inverse of R, trying R21 first since it is the answer for triangular R."""
    R = _coeffs(R)
    one = H.one2()
    R21 = H.flip(R)
    if not vsub(H.tmul(R, R21), one) and not vsub(H.tmul(R21, R), one):
        return R21
    return tensor_inv_raw(H, R)


def verify_quasitriangular(H: HopfPresentation, R, exhaustive: bool | None = None,
                           fail_fast: bool = False) -> Report:
    """(Δ⊗Id)R = R13R23, (Id⊗Δ)R = R13R12, Δ^cop(a)R = RΔ(a), R invertible.

    The intertwining identity is checked on algebra generators unless `exhaustive`;
    the elements satisfying it form a subalgebra, so this is a complete check.
    With `fail_fast` the cheapest check runs first and the report stops at the first failure.
    """
    R = _coeffs(R)
    rep = Report("quasitriangular structure")
    if exhaustive is None:
        exhaustive = H.dim <= 16

    def invertible():
        try:
            r_inverse(H, R)
            rep.check("R invertible", True)
        except ZeroDivisionError:
            rep.check("R invertible", False, "minimal polynomial has zero constant term")

    def hexagon_left():
        lhs, rhs = H.delta_left(R), H.tmul3(H.leg(R, (0, 2)), H.leg(R, (1, 2)))
        rep.check("(Δ⊗Id)(R) = R13 R23", not vsub(lhs, rhs), _first_diff(lhs, rhs))

    def hexagon_right():
        lhs, rhs = H.delta_right(R), H.tmul3(H.leg(R, (0, 2)), H.leg(R, (0, 1)))
        rep.check("(Id⊗Δ)(R) = R13 R12", not vsub(lhs, rhs), _first_diff(lhs, rhs))

    def intertwining():
        idx = range(H.dim) if exhaustive else algebra_generators(H.algebra)
        wit = None
        for a in idx:
            d = H.comult[a]
            if vsub(H.tmul(H.flip(d), R), H.tmul(R, d)):
                wit = a
                break
        rep.check("Δ^cop(a) R = R Δ(a)", wit is None, wit)

    steps = [invertible, hexagon_left, hexagon_right, intertwining]
    if fail_fast:
        steps = [intertwining, hexagon_left, hexagon_right, invertible]
    for step in steps:
        step()
        if fail_fast and not rep.ok:
            break
    return rep


def _first_diff(u: dict, v: dict):
    d = vsub(u, v)
    return min(d) if d else None


def is_triangular(H: HopfPresentation, R) -> bool:
    R = _coeffs(R)
    return not vsub(H.tmul(R, H.flip(R)), H.one2())


class DrinfeldElement:
    def __init__(self, H: HopfPresentation, u: dict, inverse: dict, report: Report):
        self.host = H
        self.u = u
        self.inverse = inverse
        self.report = report

    def is_grouplike(self) -> bool:
        H, u = self.host, self.u
        return H.eps(u) == 1 and not vsub(H.delta(u), {(a, b): x * y for a, x in u.items()
                                                        for b, y in u.items()})

    def squared(self) -> dict:
        return self.host.mul(self.u, self.u)

    def is_one(self) -> bool:
        return not vsub(self.u, self.host.one())


def drinfeld_element(H: HopfPresentation, R) -> DrinfeldElement:
    """u = Σ S(b_i) a_i for R = Σ a_i⊗b_i, with S² = Ad(u) checked on every basis element."""
    R = _coeffs(R)
    F = H.F
    u: dict = {}
    for (i, j), c in H.flip(R).items():
        vaxpy(u, H.mul(H.antipode[i], {j: F.one}), c)
    rep = Report("Drinfeld element")
    try:
        uinv = H.algebra.inverse(u)
        rep.check("u invertible", True)
    except (ValueError, ZeroDivisionError, ArithmeticError):
        uinv = None
        rep.check("u invertible", False)
    wit = None
    for a in range(H.dim):
        s2 = H.S(H.antipode[a])
        if vsub(H.mul(s2, u), H.mul(u, {a: F.one})):
            wit = a
            break
    rep.check("S²(a) u = u a", wit is None, wit)
    d = DrinfeldElement(H, u, uinv, rep)
    if is_triangular(H, R):
        rep.check("u grouplike (triangular)", d.is_grouplike())
    rep.info["u_squared_is_one"] = not vsub(d.squared(), H.one())
    return d


def r_u(H: HopfPresentation, u: dict) -> TensorSquareElement:
    """½(1⊗1 + 1⊗u + u⊗1 − u⊗u) for an involutive grouplike u."""
    F = H.F
    one = H.one()
    if vsub(H.mul(u, u), one):
        raise ValueError("u must satisfy u² = 1")
    half = F(1) / F(2)
    out: dict = {}

    def add(x, y, c):
        for a, p in x.items():
            for b, q in y.items():
                k = (a, b)
                out[k] = out.get(k, F.zero) + c * p * q

    add(one, one, half)
    add(one, u, half)
    add(u, one, half)
    add(u, u, -half)
    return TensorSquareElement(H, out)


def leg_spans(H: HopfPresentation, R) -> tuple[Span, Span]:
    R = _coeffs(R)
    left: dict = {}
    right: dict = {}
    for (i, j), c in R.items():
        left.setdefault(j, {})[i] = c
        right.setdefault(i, {})[j] = c
    return Span(H.F, left.values()), Span(H.F, right.values())


def minimal_part(H: HopfPresentation, R) -> tuple[SubHopf, int]:
    """Sub-Hopf algebra generated by the tensor legs of R; rank = its dimension."""
    L, Rt = leg_spans(H, R)
    basis = generated_subalgebra(H.algebra, L.basis() + Rt.basis())
    sub = SubHopf(H, basis)
    if sub.tensor_coords(_coeffs(R)) is None:
        raise ValueError("R does not lie in A_m ⊗ A_m")
    return sub, sub.dim


def tensor_rank(H: HopfPresentation, R) -> int:
    R = _coeffs(R)
    n, z = H.dim, H.F.zero
    return mat_rank([[R.get((i, j), z) for j in range(n)] for i in range(n)], H.F)


def f_r_map(H: HopfPresentation, R) -> list[dict]:
    """f_R(e_i*) = Σ_j R_ij e_j, i.e. f_R(p) = (p⊗Id)(R)."""
    R = _coeffs(R)
    f = [dict() for _ in range(H.dim)]
    for (i, j), c in R.items():
        f[i][j] = c
    return f


def check_f_r_iso(H: HopfPresentation, R) -> Report:
    """For minimal triangular R, f_R : A_m*^cop -> A_m is a Hopf algebra isomorphism."""
    sub, rank = minimal_part(H, R)
    Rm = sub.tensor_coords(_coeffs(R))
    B = sub.hopf
    f = [dict() for _ in range(rank)]
    for (i, j), c in Rm.items():
        f[i][j] = c
    src = co_opposite(dual_hopf(B, verify=False))
    rep = check_hopf_map(f, src, B, "f_R : A_m*cop -> A_m")
    rep.info["rank"] = rank
    return rep


def triangular_report(H: HopfPresentation, R, name: str = "triangular") -> Report:
    """Full summary used by the gallery: Hopf axioms, QT axioms, triangularity, u, rank."""
    rep = Report(name)
    rep.extend(verify_hopf(H), "hopf: ")
    qt = verify_quasitriangular(H, R)
    rep.extend(qt, "qt: ")
    rep.check("R R21 = 1⊗1", is_triangular(H, R))
    if qt.ok:
        d = drinfeld_element(H, R)
        rep.extend(d.report, "drinfeld: ")
        rep.info["drinfeld_is_one"] = d.is_one()
        rep.info["rank"] = minimal_part(H, R)[1]
    else:
        # u and the minimal part are only meaningful for an R-matrix
        rep.info["drinfeld_is_one"] = None
        rep.info["rank"] = None
    rep.info["dim"] = H.dim
    rep.info["commutative"] = H.is_commutative()
    rep.info["cocommutative"] = H.is_cocommutative()
    return rep
