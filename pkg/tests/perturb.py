"""Single-constant perturbations of a presentation, for negative controls."""
import random

from trihopf.algebra import StructureAlgebra
from trihopf.hopf import HopfPresentation


def sites(H: HopfPresentation):
    n = H.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                yield ("mult", i, j, k)
                yield ("comult", i, j, k)
            yield ("antipode", i, j)
        yield ("unit", i)
        yield ("counit", i)


def sample_sites(H: HopfPresentation, k: int, seed: int):
    """k sites per kind, drawn with a fixed seed."""
    rng = random.Random(seed)
    n = H.dim
    out = []
    for _ in range(k):
        out.append(("mult", rng.randrange(n), rng.randrange(n), rng.randrange(n)))
        out.append(("comult", rng.randrange(n), rng.randrange(n), rng.randrange(n)))
        out.append(("antipode", rng.randrange(n), rng.randrange(n)))
    out += [("unit", rng.randrange(n)), ("counit", rng.randrange(n))]
    return out


def _bump(v: dict, key, one):
    v = dict(v)
    v[key] = v.get(key, one * 0) + one
    return v


def perturb(H: HopfPresentation, site) -> HopfPresentation:
    """Add 1 to the structure constant at `site`."""
    A, one = H.algebra, H.F.one
    table, unit = A.table, A.unit
    comult, counit, antipode = H.comult, H.counit, H.antipode
    kind = site[0]
    if kind == "mult":
        _, i, j, k = site
        table = [list(row) for row in table]
        table[i][j] = _bump(table[i][j], k, one)
    elif kind == "unit":
        unit = _bump(unit, site[1], one)
    elif kind == "comult":
        _, i, j, k = site
        comult = list(comult)
        comult[i] = _bump(comult[i], (j, k), one)
    elif kind == "counit":
        counit = list(counit)
        counit[site[1]] = counit[site[1]] + one
    else:
        _, i, j = site    # coefficient of e_i in S(e_j)
        antipode = list(antipode)
        antipode[j] = _bump(antipode[j], i, one)
    B = StructureAlgebra(H.F, table, unit, A.names)
    return HopfPresentation(B, comult, counit, antipode, parity=H.parity, name=f"{H.name} perturbed")


def perturb_tensor(X: dict, key, one) -> dict:
    return _bump(X, key, one)
