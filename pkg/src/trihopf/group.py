"""Finite groups given by Cayley tables, with subgroup, coset and character tools."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations, product
from math import gcd

from .scalar import Cyc, CyclotomicField


class GroupAxiomError(ValueError):
    def __init__(self, axiom: str, witness):
        super().__init__(f"{axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class FiniteGroup:
    """A finite group on indices 0..order-1 with identity 0."""

    def __init__(self, table, names=None, check: bool = True):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.names = list(names) if names is not None else None
        if check:
            self._verify()
        self.identity = 0
        inv = [0] * self.order
        for a in range(self.order):
            row = self.table[a]
            for b in range(self.order):
                if row[b] == 0:
                    inv[a] = b
                    break
        self.inverse = tuple(inv)

    def _verify(self):
        n = self.order
        if n == 0:
            raise GroupAxiomError("nonempty", ())
        for row in self.table:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise GroupAxiomError("table shape", row)
        T = self.table
        for a in range(n):
            if T[0][a] != a or T[a][0] != a:
                raise GroupAxiomError("identity (index 0)", (0, a))
        for a in range(n):
            if 0 not in T[a]:
                raise GroupAxiomError("inverse", (a,))
            b = T[a].index(0)
            if T[b][a] != 0:
                raise GroupAxiomError("inverse", (a, b))
        for a in range(n):
            Ta = T[a]
            for b in range(n):
                ab = Ta[b]
                Tb = T[b]
                Tab = T[ab]
                for c in range(n):
                    if Tab[c] != Ta[Tb[c]]:
                        raise GroupAxiomError("associativity", (a, b, c))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def prod(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = 0
        for _ in range(k):
            r = self.table[r][a]
        return r

    def conj(self, g: int, a: int) -> int:
        """g a g^-1."""
        return self.table[self.table[g][a]][self.inverse[g]]

    @property
    def elements(self) -> range:
        return range(self.order)

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for a in self.elements:
            o = self.element_order(a)
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        T = self.table
        return all(T[a][b] == T[b][a] for a in self.elements for b in range(a))

    def closure(self, gens) -> tuple[int, ...]:
        elems = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return tuple(sorted(elems))

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily in index order."""
        gens: list[int] = []
        cur = {0}
        for a in self.elements:
            if a not in cur:
                gens.append(a)
                cur = set(self.closure(gens))
            if len(cur) == self.order:
                break
        return gens

    def subgroup(self, elements) -> "Subgroup":
        return Subgroup(self, elements)

    def generated_subgroup(self, gens) -> "Subgroup":
        return Subgroup(self, self.closure(gens), check=False)

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [0], check=False)

    def subgroups(self) -> list["Subgroup"]:
        """All subgroups, by joining cyclic subgroups until stable."""
        cyc = {self.closure([a]) for a in self.elements}
        found = set(cyc)
        frontier = set(cyc)
        while frontier:
            new = set()
            for S in frontier:
                for C in cyc:
                    if not set(C) <= set(S):
                        J = self.closure(set(S) | set(C))
                        if J not in found:
                            new.add(J)
            found |= new
            frontier = new
        return [Subgroup(self, s, check=False) for s in sorted(found, key=lambda s: (len(s), s))]

    def commutator_subgroup(self, H: "Subgroup | None" = None) -> "Subgroup":
        elems = H.elements if H is not None else tuple(self.elements)
        comms = {self.prod(a, b, self.inverse[a], self.inverse[b]) for a in elems for b in elems}
        return self.generated_subgroup(comms)

    def normalizer(self, H: "Subgroup") -> "Subgroup":
        S = set(H.elements)
        return Subgroup(self, [g for g in self.elements
                               if all(self.conj(g, h) in S for h in H.elements)], check=False)

    def centralizer(self, a: int, within=None) -> list[int]:
        pool = within if within is not None else self.elements
        return [m for m in pool if self.table[m][a] == self.table[a][m]]

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def from_cayley_table(table, names=None) -> FiniteGroup:
    return FiniteGroup(table, names=names, check=True)


def group_from_json(data: dict) -> FiniteGroup:
    if "table" not in data:
        raise ValueError("group file needs a 'table' entry")
    G = from_cayley_table(data["table"], names=data.get("names"))
    if "order" in data and data["order"] != G.order:
        raise ValueError("declared order does not match table")
    return G


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple
    check: bool = dc_field(default=True, compare=False, repr=False)

    def __init__(self, parent: FiniteGroup, elements, check: bool = True):
        els = tuple(sorted(set(int(e) for e in elements)))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "check", check)
        if check:
            S = set(els)
            if 0 not in S:
                raise GroupAxiomError("subgroup contains identity", els)
            for a in els:
                if parent.inverse[a] not in S:
                    raise GroupAxiomError("subgroup closed under inverse", (a,))
                for b in els:
                    if parent.table[a][b] not in S:
                        raise GroupAxiomError("subgroup closed under product", (a, b))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in set(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; local index i is parent element elements[i]."""
        pos = {e: i for i, e in enumerate(self.elements)}
        T = self.parent.table
        return FiniteGroup([[pos[T[a][b]] for b in self.elements] for a in self.elements],
                           names=[self.parent.name(e) for e in self.elements], check=False)

    def local(self, a: int) -> int:
        return self.elements.index(a)


# ---------------------------------------------------------------- constructors

def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Index g*|H| + h for the pair (g, h)."""
    m = H.order
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m]
              for b in range(G.order * m)] for a in range(G.order * m)]
    names = None
    if G.names or H.names:
        names = [f"({G.name(a // m)},{H.name(a % m)})" for a in range(G.order * m)]
    return FiniteGroup(table, names=names, check=False)


def abelian_group(*orders: int) -> FiniteGroup:
    """Z_n1 x Z_n2 x ...; index is mixed radix with the last factor fastest."""
    G = cyclic_group(1)
    for n in orders:
        G = direct_product(G, cyclic_group(n))
    return G


def abelian_index(orders, coords) -> int:
    idx = 0
    for n, c in zip(orders, coords):
        idx = idx * n + (c % n)
    return idx


def abelian_coords(orders, idx: int) -> tuple:
    out = []
    for n in reversed(orders):
        out.append(idx % n)
        idx //= n
    return tuple(reversed(out))


def symmetric_group(n: int) -> tuple[FiniteGroup, list[tuple]]:
    """S_n on permutations in lexicographic order (identity first); product is composition p∘q."""
    perms = list(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(x + 1) for x in p) for p in perms]
    return FiniteGroup(table, names=names, check=False), perms


def perm_sign(p) -> int:
    s = 1
    seen = set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def extend_action(Q: FiniteGroup, A: FiniteGroup, gen_action: dict) -> list[tuple]:
    """Extend an action given on generators of Q to all of Q (as permutations of A)."""
    ident = tuple(range(A.order))
    act = {0: ident}
    frontier = [0]
    while frontier:
        new = []
        for q in frontier:
            for g, perm in gen_action.items():
                r = Q.table[g][q]
                # (g q)·a = g·(q·a)
                img = tuple(perm[act[q][a]] for a in range(A.order))
                if r in act:
                    if act[r] != img:
                        raise GroupAxiomError("action is a homomorphism", (g, q))
                else:
                    act[r] = img
                    new.append(r)
        frontier = new
    if len(act) != Q.order:
        raise GroupAxiomError("generators of the acting group", sorted(gen_action))
    return [act[q] for q in range(Q.order)]


def verify_action(Q: FiniteGroup, A: FiniteGroup, action) -> None:
    n = A.order
    if tuple(action[0]) != tuple(range(n)):
        raise GroupAxiomError("identity acts trivially", (0,))
    for q in Q.elements:
        p = action[q]
        if sorted(p) != list(range(n)):
            raise GroupAxiomError("action by bijections", (q,))
        for a in A.elements:
            for b in A.elements:
                if p[A.table[a][b]] != A.table[p[a]][p[b]]:
                    raise GroupAxiomError("action by automorphisms", (q, a, b))
    for q in Q.elements:
        for r in Q.elements:
            qr = Q.table[q][r]
            for a in A.elements:
                if action[qr][a] != action[q][action[r][a]]:
                    raise GroupAxiomError("action is a homomorphism", (q, r, a))


def semidirect_product(Q: FiniteGroup, A: FiniteGroup, action) -> FiniteGroup:
    """Q ⋉ A on pairs (q, a) = index q*|A| + a, with (q,1)(1,a)(q,1)^-1 = (1, q·a).

    `action` is a list of permutations of A indexed by Q, or a dict on generators of Q.
    Product: (q,a)(q',a') = (qq', (q'^-1·a) a').
    """
    if isinstance(action, dict):
        action = extend_action(Q, A, action)
    verify_action(Q, A, action)
    m = A.order
    N = Q.order * m
    table = [[0] * N for _ in range(N)]
    for q in Q.elements:
        for a in A.elements:
            x = q * m + a
            for q2 in Q.elements:
                act = action[Q.inverse[q2]]
                qq = Q.table[q][q2] * m
                aa = act[a]
                Ta = A.table[aa]
                row = table[x]
                for a2 in A.elements:
                    row[q2 * m + a2] = qq + Ta[a2]
    names = None
    if Q.names or A.names:
        names = [f"({Q.name(x // m)},{A.name(x % m)})" for x in range(N)]
    return FiniteGroup(table, names=names, check=False)


# ---------------------------------------------------------------- characters

@dataclass(frozen=True)
class Character:
    """Character of an abelian group; chi(a) = zeta_e^exps[a] with e the group exponent."""
    group: FiniteGroup
    exps: tuple
    e: int

    def value(self, a: int, F: CyclotomicField) -> Cyc:
        if F.n % self.e:
            raise ValueError(f"conductor {F.n} does not contain the values of this character")
        return F.zeta(self.exps[a] * (F.n // self.e))

    def values(self, F: CyclotomicField) -> list[Cyc]:
        return [self.value(a, F) for a in self.group.elements]

    def is_trivial(self) -> bool:
        return not any(self.exps)


def character_group(A: FiniteGroup) -> list[Character]:
    """All characters of an abelian group, trivial character first."""
    if not A.is_abelian():
        raise ValueError("character_group needs an abelian group")
    e = A.exponent()
    gens = A.generators()
    found = []
    for vals in product(*[range(0, e, e // A.element_order(g)) for g in gens]):
        exps = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            new = []
            for x in frontier:
                for g, v in zip(gens, vals):
                    y = A.table[x][g]
                    ve = (exps[x] + v) % e
                    if y in exps:
                        if exps[y] != ve:
                            ok = False
                            break
                    else:
                        exps[y] = ve
                        new.append(y)
                if not ok:
                    break
            frontier = new
        if ok:
            found.append(Character(A, tuple(exps[a] for a in A.elements), e))
    found.sort(key=lambda c: tuple(c.exps[g] for g in gens))
    assert len(found) == A.order
    return found


def dual_group(A: FiniteGroup) -> tuple[FiniteGroup, list[Character]]:
    """The character group as a FiniteGroup under pointwise product; index i is chars[i]."""
    chars = character_group(A)
    pos = {c.exps: i for i, c in enumerate(chars)}
    e = chars[0].e
    table = [[pos[tuple((x + y) % e for x, y in zip(c.exps, d.exps))] for d in chars] for c in chars]
    return FiniteGroup(table, check=False), chars


# ---------------------------------------------------------------- cocycles and forms

class TwoCocycle:
    """A normalized 2-cocycle H x H -> roots of unity."""

    def __init__(self, group: FiniteGroup, values, check: bool = True):
        self.group = group
        self.values = [list(r) for r in values]
        self.field = self.values[0][0].field
        if check:
            self.verify()

    def __call__(self, g: int, h: int) -> Cyc:
        return self.values[g][h]

    def verify(self) -> None:
        G, c = self.group, self.values
        for g in G.elements:
            if c[0][g] != 1 or c[g][0] != 1:
                raise GroupAxiomError("normalized cocycle", (0, g))
        for g in G.elements:
            for h in G.elements:
                gh = G.table[g][h]
                for l in G.elements:
                    if c[g][h] * c[gh][l] != c[h][l] * c[g][G.table[h][l]]:
                        raise GroupAxiomError("cocycle identity", (g, h, l))

    @classmethod
    def trivial(cls, group: FiniteGroup, F: CyclotomicField) -> "TwoCocycle":
        return cls(group, [[F.one] * group.order for _ in group.elements], check=False)

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.values]


class BilinearForm:
    """A bimultiplicative form on an abelian group."""

    def __init__(self, group: FiniteGroup, values, check: bool = True):
        self.group = group
        self.values = [list(r) for r in values]
        self.field = self.values[0][0].field
        if check:
            self.verify()

    def __call__(self, g: int, h: int) -> Cyc:
        return self.values[g][h]

    def verify(self) -> None:
        G, F = self.group, self.values
        if not G.is_abelian():
            raise ValueError("bilinear forms are defined on abelian groups")
        for a in G.elements:
            for b in G.elements:
                for c in G.elements:
                    if F[G.table[a][b]][c] != F[a][c] * F[b][c]:
                        raise GroupAxiomError("multiplicative in first argument", (a, b, c))
                    if F[a][G.table[b][c]] != F[a][b] * F[a][c]:
                        raise GroupAxiomError("multiplicative in second argument", (a, b, c))

    def is_skew(self) -> bool:
        return all(self.values[a][b] * self.values[b][a] == 1
                   for a in self.group.elements for b in self.group.elements)

    def is_nondegenerate(self) -> bool:
        G = self.group
        return all(any(self.values[a][b] != 1 for b in G.elements) for a in G.elements if a != 0)


def cocycle_from_bilinear(F: BilinearForm) -> TwoCocycle:
    return TwoCocycle(F.group, F.values, check=True)


def is_nondegenerate(c: TwoCocycle) -> bool:
    """For every g != 1, m -> c(m,g)/c(g,m) is a nontrivial map on the centralizer of g."""
    G = c.group
    for g in G.elements:
        if g == 0:
            continue
        if all(c(m, g) == c(g, m) for m in G.centralizer(g)):
            return False
    return True


def symplectic_form(p: int, F: CyclotomicField | None = None) -> tuple[FiniteGroup, BilinearForm]:
    """(Z/p)^2 with c((x,y),(x',y')) = zeta_p^(x y'); its antisymmetrization is the symplectic pairing."""
    F = F or CyclotomicField(p)
    G = abelian_group(p, p)
    vals = [[F.zeta((a // p) * (b % p) * (F.n // p)) for b in G.elements] for a in G.elements]
    return G, BilinearForm(G, vals)


def standard_symplectic_form(p: int, F: CyclotomicField | None = None) -> tuple[FiniteGroup, BilinearForm]:
    """(Z/p)^2 with the alternating pairing ((x,y),(x',y')) = zeta_p^(x y' - y x')."""
    F = F or CyclotomicField(p)
    G = abelian_group(p, p)
    s = F.n // p
    vals = [[F.zeta(((a // p) * (b % p) - (a % p) * (b // p)) % p * s) for b in G.elements]
            for a in G.elements]
    return G, BilinearForm(G, vals)


# ---------------------------------------------------------------- cosets

def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple]:
    seen, out = set(), []
    for g in G.elements:
        if g in seen:
            continue
        c = tuple(sorted(G.table[g][h] for h in H.elements))
        seen.update(c)
        out.append(c)
    return out


def double_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple]:
    """Partition of G into double cosets HgH, each sorted, ordered by smallest element."""
    seen, out = set(), []
    for g in G.elements:
        if g in seen:
            continue
        Z = tuple(sorted({G.table[G.table[h][g]][k] for h in H.elements for k in H.elements}))
        seen.update(Z)
        out.append(Z)
    return out


def stabilizer_data(G: FiniteGroup, H: Subgroup, g: int):
    """K_g = H ∩ gHg^-1 with theta1(a) = g^-1 a g and theta2(a) = a."""
    Hs = set(H.elements)
    conjH = {G.conj(g, h) for h in H.elements}
    K = Subgroup(G, sorted(Hs & conjH))
    gi = G.inverse[g]
    theta1 = {a: G.conj(gi, a) for a in K.elements}
    theta2 = {a: a for a in K.elements}
    for a in K.elements:
        assert theta1[a] in Hs
    return K, theta1, theta2


def is_perfect(H: Subgroup) -> bool:
    return H.parent.commutator_subgroup(H).elements == H.elements


def is_self_normalizing(G: FiniteGroup, H: Subgroup) -> bool:
    return G.normalizer(H).elements == H.elements
