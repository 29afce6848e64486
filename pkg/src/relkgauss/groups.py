"""Small finite groups given by multiplication tables, and their characters.

Character tables are found by monomial induction: linear characters come
from the abelianization, the rest are induced from linear characters of
subgroups and kept when they have norm one.  Every group handled here is
supersolvable, so this always terminates with a full table.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .cyclonum import CycNum, det as cyc_det, one, zero

MAX_ORDER = 200


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group on the indices 0..n-1 with an explicit multiplication table."""

    def __init__(self, mult: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None,
                 name: str | None = None, check: bool = True):
        self.mult = tuple(tuple(row) for row in mult)
        self.size = n = len(self.mult)
        self.labels = list(labels) if labels is not None else list(range(n))
        self.name = name or f"G{n}"
        ident = [e for e in range(n) if all(self.mult[e][x] == x for x in range(n))]
        if not ident:
            raise GroupError("no identity element")
        self.identity = ident[0]
        self.inv = [0] * n
        for a in range(n):
            row = self.mult[a]
            b = row.index(self.identity) if self.identity in row else None
            if b is None:
                raise GroupError("element without inverse")
            self.inv[a] = b
        if check:
            self._check()
        self.orders = [self._order(a) for a in range(n)]
        self.exponent = math.lcm(*self.orders) if n else 1
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    def _check(self):
        n = self.size
        for row in self.mult:
            if sorted(row) != list(range(n)):
                raise GroupError("table is not a latin square")
        # associativity on all triples; fine for n <= 200
        m = self.mult
        for a in range(n):
            ma = m[a]
            for b in range(n):
                ab = ma[b]
                mb = m[b]
                mab = m[ab]
                for c in range(n):
                    if mab[c] != ma[mb[c]]:
                        raise GroupError("table is not associative")

    def _order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult[x][a]
            k += 1
        return k

    @classmethod
    def from_function(cls, elements: Sequence[Hashable], op: Callable, name: str | None = None,
                      check: bool = False) -> "FiniteGroup":
        index = {e: i for i, e in enumerate(elements)}
        mult = [[index[op(a, b)] for b in elements] for a in elements]
        return cls(mult, labels=elements, name=name, check=check)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.size})"

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def power(self, a: int, k: int) -> int:
        k %= self.orders[a]
        x = self.identity
        while k:
            x = self.mult[x][a]
            k -= 1
        return x

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mult[self.mult[x][g]][self.inv[x]]

    def index_of(self, label: Hashable) -> int:
        return self._label_index[label]

    def is_abelian(self) -> bool:
        m = self.mult
        return all(m[a][b] == m[b][a] for a in range(self.size) for b in range(a))

    # -- conjugacy classes ------------------------------------------------
    @cached_property
    def classes(self) -> list:
        seen = [-1] * self.size
        raw = []
        for g in range(self.size):
            if seen[g] >= 0:
                continue
            cl = sorted({self.conj(x, g) for x in range(self.size)})
            raw.append(tuple(cl))
            for h in cl:
                seen[h] = 0
        raw.sort(key=lambda c: (self.orders[c[0]], len(c), c[0]))
        return raw

    @cached_property
    def class_of(self) -> list:
        out = [0] * self.size
        for i, cl in enumerate(self.classes):
            for g in cl:
                out[g] = i
        return out

    @property
    def class_reps(self) -> list:
        return [cl[0] for cl in self.classes]

    @property
    def class_sizes(self) -> list:
        return [len(cl) for cl in self.classes]

    # -- subgroups --------------------------------------------------------
    def closure(self, gens: Iterable[int]) -> frozenset:
        gens = list(gens)
        elems = [self.identity]
        seen = {self.identity}
        i = 0
        while i < len(elems):
            x = elems[i]
            i += 1
            for g in gens:
                y = self.mult[x][g]
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
        return frozenset(seen)

    @cached_property
    def center(self) -> frozenset:
        m = self.mult
        return frozenset(z for z in range(self.size)
                         if all(m[z][x] == m[x][z] for x in range(self.size)))

    @cached_property
    def derived_subgroup(self) -> frozenset:
        m, inv = self.mult, self.inv
        comms = {m[m[a][b]][m[inv[a]][inv[b]]] for a in range(self.size) for b in range(self.size)}
        return self.closure(comms)

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        return (self.identity in s and bool(s)
                and all(self.mult[a][b] in s for a in s for b in s))

    def is_normal(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        return all(self.conj(x, h) in s for x in range(self.size) for h in s)

    @cached_property
    def subgroups(self) -> list:
        """All subgroups as frozensets, sorted by size then content."""
        cyclic = {self.closure([g]) for g in range(self.size)}
        found = set(cyclic)
        frontier = list(cyclic)
        cyc_list = sorted(cyclic, key=lambda s: (len(s), sorted(s)))
        while frontier:
            nxt = []
            for H in frontier:
                for C in cyc_list:
                    if C <= H:
                        continue
                    J = self.closure(list(H) + [max(C, key=lambda c: self.orders[c])])
                    if J not in found:
                        found.add(J)
                        nxt.append(J)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def subgroup(self, elems: Iterable[int]) -> "Subgroup":
        return Subgroup.of(self, elems)

    def quotient(self, normal: Iterable[int]) -> "Quotient":
        return Quotient.of(self, normal)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple
    group: FiniteGroup
    embed: tuple  # index in group -> index in parent

    @classmethod
    def of(cls, G: FiniteGroup, elems: Iterable[int]) -> "Subgroup":
        elements = tuple(sorted(set(elems)))
        if not G.is_subgroup(elements):
            raise GroupError("not a subgroup")
        pos = {g: i for i, g in enumerate(elements)}
        mult = [[pos[G.mult[a][b]] for b in elements] for a in elements]
        H = FiniteGroup(mult, labels=[G.labels[g] for g in elements],
                        name=f"sub{len(elements)}({G.name})", check=False)
        return cls(G, elements, H, elements)

    @property
    def index(self) -> int:
        return self.parent.size // len(self.elements)


@dataclass(frozen=True, eq=False)
class Quotient:
    parent: FiniteGroup
    normal: tuple
    group: FiniteGroup
    proj: tuple  # index in parent -> index in quotient

    @classmethod
    def of(cls, G: FiniteGroup, normal: Iterable[int]) -> "Quotient":
        N = tuple(sorted(set(normal)))
        if not G.is_subgroup(N) or not G.is_normal(N):
            raise GroupError("not a normal subgroup")
        proj = [-1] * G.size
        reps = []
        for g in range(G.size):
            if proj[g] < 0:
                for h in N:
                    proj[G.mult[g][h]] = len(reps)
                reps.append(g)
        mult = [[proj[G.mult[a][b]] for b in reps] for a in reps]
        Q = FiniteGroup(mult, labels=[G.labels[r] for r in reps],
                        name=f"{G.name}/N{len(N)}", check=False)
        return cls(G, N, Q, tuple(proj))


# -- constructions ----------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_function(list(range(n)), lambda a, b: (a + b) % n, name=f"C{n}")


def abelian(*ns: int) -> FiniteGroup:
    elems = list(itertools.product(*[range(n) for n in ns]))
    return FiniteGroup.from_function(
        elems, lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns)),
        name="x".join(f"C{n}" for n in ns) or "C1")


def semidirect(m: int, k: int, r: int) -> FiniteGroup:
    """Z/m x| Z/k with the generator b acting by b^-1 a b = a^r; elements a^i b^j as (i, j)."""
    if pow(r, k, m) != 1 % m:
        raise GroupError(f"{r} does not have order dividing {k} mod {m}")
    rinv = pow(r, -1, m) if m > 1 else 0
    pw = [pow(rinv, j, m) for j in range(k)]

    def op(x, y):
        return ((x[0] + y[0] * pw[x[1]]) % m, (x[1] + y[1]) % k)

    elems = [(i, j) for j in range(k) for i in range(m)]
    return FiniteGroup.from_function(elems, op, name=f"C{m}:C{k}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    elems = [(a, b) for a in range(G.size) for b in range(H.size)]
    labels = [(G.labels[a], H.labels[b]) for a, b in elems]
    index = {e: i for i, e in enumerate(elems)}
    mult = [[index[(G.mult[a][c], H.mult[b][d])] for c, d in elems] for a, b in elems]
    return FiniteGroup(mult, labels=labels, name=f"{G.name}x{H.name}", check=False)


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p; exponent p for odd p."""
    elems = list(itertools.product(range(p), repeat=3))

    def op(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)

    return FiniteGroup.from_function(elems, op, name=f"Heis({p})")


def modular(p: int) -> FiniteGroup:
    """<a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>."""
    G = semidirect(p * p, p, 1 + p)
    G.name = f"M({p}^3)"
    return G


def metacyclic_l2p(l: int, p: int) -> FiniteGroup:
    """(C_p x| C_l) x C_l: order l^2 p, normal Sylow p-subgroup, quotient (Z/l)^2."""
    if (p - 1) % l:
        raise GroupError(f"{l} does not divide {p}-1")
    g = next(g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)))
    w = pow(g, (p - 1) // l, p)
    G = direct_product(semidirect(p, l, w), cyclic(l))
    G.name = f"(C{p}:C{l})xC{l}"
    return G


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def build_group(spec: str) -> FiniteGroup:
    """Build a group from a tag such as ``cyclic:5``, ``abelian:3,3``, ``heisenberg:3``,
    ``modular:3`` or ``metacyclic:3,3,7``."""
    try:
        tag, _, rest = spec.partition(":")
        args = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError as exc:
        raise GroupError(f"bad group spec {spec!r}") from exc
    tag = tag.strip().lower()
    if tag == "cyclic" and len(args) == 1 and args[0] >= 1:
        G = cyclic(args[0])
    elif tag in ("abelian", "product") and args and all(a >= 1 for a in args):
        G = abelian(*args)
    elif tag == "heisenberg" and len(args) == 1 and _is_odd_prime(args[0]):
        G = heisenberg(args[0])
    elif tag == "modular" and len(args) == 1 and _is_odd_prime(args[0]):
        G = modular(args[0])
    elif tag == "metacyclic" and len(args) in (2, 3):
        l, p = args[0], args[-1]
        if len(args) == 3 and args[0] != args[1]:
            raise GroupError("only the metacyclic(l,l,p) family is supported")
        G = metacyclic_l2p(l, p)
    else:
        raise GroupError(f"unsupported group spec {spec!r}")
    if G.size > MAX_ORDER:
        raise GroupError(f"group order {G.size} exceeds bound {MAX_ORDER}")
    return G


def _is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


# -- characters ---------------------------------------------------------------

def abelian_character_exponents(A: FiniteGroup) -> list:
    """All characters of an abelian group as lists k with chi(a) = zeta_e^k[a], e = exp(A)."""
    e = A.exponent
    S = [A.identity]
    in_S = {A.identity}
    chars = [{A.identity: 0}]
    for g in range(A.size):
        if g in in_S:
            continue
        m, x = 1, g
        while x not in in_S:
            x = A.mult[x][g]
            m += 1
        # x = g^m lies in S
        powers = [A.identity]
        for _ in range(m - 1):
            powers.append(A.mult[powers[-1]][g])
        new_S = [A.mult[gp][s] for gp in powers for s in S]
        new_chars = []
        for chi in chars:
            v = chi[x]
            x0 = next(t for t in range(e) if (m * t - v) % e == 0)
            for t in range(m):
                val = x0 + t * (e // m)
                ext = {}
                for j, gp in enumerate(powers):
                    for s in S:
                        ext[A.mult[gp][s]] = (j * val + chi[s]) % e
                new_chars.append(ext)
        S = new_S
        in_S = set(S)
        chars = new_chars
    return [[chi[a] for a in range(A.size)] for chi in chars]


def linear_character_exponents(G: FiniteGroup) -> list:
    """Linear characters of G as exponent lists relative to zeta_{exp G}."""
    Q = G.quotient(G.derived_subgroup)
    scale = G.exponent // Q.group.exponent
    return [[k[Q.proj[g]] * scale % G.exponent for g in range(G.size)]
            for k in abelian_character_exponents(Q.group)]


@dataclass
class MonomialRep:
    """The representation ind_H^G(lambda) with explicit monomial matrices."""

    group: FiniteGroup
    subgroup: tuple
    lam: dict  # element of H -> exponent of zeta_{exp G}
    transversal: tuple
    coset_of: list = field(repr=False, default_factory=list)

    @classmethod
    def build(cls, G: FiniteGroup, H: Iterable[int], lam: dict) -> "MonomialRep":
        H = tuple(sorted(H))
        coset_of = [-1] * G.size
        reps = []
        for g in range(G.size):
            if coset_of[g] < 0:
                for h in H:
                    coset_of[G.mult[g][h]] = len(reps)
                reps.append(g)
        return cls(G, H, dict(lam), tuple(reps), coset_of)

    @property
    def degree(self) -> int:
        return len(self.transversal)

    def monomial(self, g: int) -> list:
        """For each column j the pair (row i, exponent) with g t_j = t_i h, entry lambda(h)."""
        G = self.group
        out = []
        for t in self.transversal:
            x = G.mult[g][t]
            i = self.coset_of[x]
            h = G.mult[G.inv[self.transversal[i]]][x]
            out.append((i, self.lam[h]))
        return out

    def matrix(self, g: int) -> list:
        e = self.group.exponent
        d = self.degree
        mat = [[zero(e)] * d for _ in range(d)]
        for j, (i, k) in enumerate(self.monomial(g)):
            mat[i][j] = CycNum.from_exponents(e, {k: 1})
        return mat

    def trace(self, g: int) -> CycNum:
        e = self.group.exponent
        terms = {}
        for j, (i, k) in enumerate(self.monomial(g)):
            if i == j:
                terms[k] = terms.get(k, 0) + 1
        return CycNum.from_exponents(e, terms)


class IrrTable:
    """Irreducible characters of a finite group, values indexed by conjugacy class."""

    def __init__(self, group: FiniteGroup, chars: list, reps: list):
        self.group = group
        self.chars = chars
        self.reps = reps
        self._index = {tuple(c): i for i, c in enumerate(chars)}

    def __len__(self):
        return len(self.chars)

    @property
    def degrees(self) -> list:
        return [int(c[0].as_rational()) for c in self.chars]

    @property
    def exponent(self) -> int:
        return self.group.exponent

    def value(self, i: int, g: int) -> CycNum:
        return self.chars[i][self.group.class_of[g]]

    def index(self, values: Sequence[CycNum]) -> int | None:
        return self._index.get(tuple(values))

    def is_linear(self, i: int) -> bool:
        return self.degrees[i] == 1

    @cached_property
    def trivial(self) -> int:
        return self._index[tuple(one(self.exponent) for _ in self.group.classes)]

    def inner(self, a: Sequence[CycNum], b: Sequence[CycNum]) -> Fraction:
        G = self.group
        total = zero(self.exponent)
        for size, x, y in zip(G.class_sizes, a, b):
            total = total + size * (x * y.conj())
        r = total.as_rational()
        if r is None:
            raise ValueError("inner product is not rational")
        return r / G.size

    def decompose(self, values: Sequence[CycNum]) -> "VirtualChar":
        coeffs = []
        for c in self.chars:
            r = self.inner(values, c)
            if r.denominator != 1:
                raise ValueError("class function is not a virtual character")
            coeffs.append(int(r))
        return VirtualChar(self, tuple(coeffs))

    def class_function(self, v: "VirtualChar") -> list:
        out = [zero(self.exponent)] * len(self.group.classes)
        for c, chi in zip(v.coeffs, self.chars):
            if c:
                out = [o + c * x for o, x in zip(out, chi)]
        return out

    def irreducible(self, i: int) -> "VirtualChar":
        return VirtualChar(self, tuple(int(j == i) for j in range(len(self.chars))))

    # -- operations on characters ---------------------------------------
    def power_map(self, k: int) -> list:
        G = self.group
        return [G.class_of[G.power(r, k)] for r in G.class_reps]

    def adams_values(self, values: Sequence[CycNum], k: int) -> list:
        return [values[c] for c in self.power_map(k)]

    def adams(self, v: "VirtualChar", k: int) -> "VirtualChar":
        if math.gcd(k, self.group.size) != 1:
            raise ValueError(f"Adams operator needs k coprime to |G| = {self.group.size}")
        return self.decompose(self.adams_values(self.class_function(v), k))

    def adams_index(self, i: int, k: int) -> int:
        """Index of psi_k(chi_i), which is irreducible when k is coprime to |G|."""
        if math.gcd(k, self.group.size) != 1:
            raise ValueError(f"Adams operator needs k coprime to |G| = {self.group.size}")
        j = self.index(self.adams_values(self.chars[i], k))
        if j is None:
            raise ValueError("Adams image is not irreducible")
        return j

    def galois_twist(self, i: int, k: int) -> int:
        if math.gcd(k, self.exponent) != 1:
            raise ValueError(f"{k} is not coprime to the exponent {self.exponent}")
        j = self.index([x.galois_apply(k % self.exponent) for x in self.chars[i]])
        if j is None:
            raise ValueError("Galois twist not found in table")
        return j

    def galois_orbits(self) -> list:
        e = self.exponent
        seen, orbits = set(), []
        for i in range(len(self.chars)):
            if i in seen:
                continue
            orb = sorted({self.galois_twist(i, k) for k in range(1, e + 1) if math.gcd(k, e) == 1})
            seen.update(orb)
            orbits.append(orb)
        return orbits

    def fs_indicator(self, i: int) -> int:
        G = self.group
        chi = self.chars[i]
        total = zero(self.exponent)
        for size, c in zip(G.class_sizes, self.power_map(2)):
            total = total + size * chi[c]
        r = total.as_rational() / G.size
        return int(r)

    def symplectic(self) -> list:
        return [i for i in range(len(self.chars)) if self.fs_indicator(i) == -1]

    @cached_property
    def monomial_reps(self) -> list:
        return self.reps

    def det_of(self, a: dict, i: int) -> CycNum:
        """det T_chi(a) for a = {group element: coefficient}."""
        e = self.exponent
        if self.is_linear(i):
            total = zero(e)
            for g, c in a.items():
                total = total + c * self.value(i, g)
            return total
        rep = self.reps[i]
        d = rep.degree
        mat = [[zero(e)] * d for _ in range(d)]
        for g, c in a.items():
            for j, (r, k) in enumerate(rep.monomial(g)):
                mat[r][j] = mat[r][j] + c * CycNum.from_exponents(e, {k: 1})
        return cyc_det(mat)

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.name,
            "order": G.size,
            "exponent": G.exponent,
            "classes": [{"representative": str(G.labels[cl[0]]), "size": len(cl),
                         "element_order": G.orders[cl[0]]} for cl in G.classes],
            "degrees": self.degrees,
            "characters": [[v.to_json() for v in chi] for chi in self.chars],
        }


@dataclass(frozen=True)
class VirtualChar:
    table: IrrTable
    coeffs: tuple

    def __add__(self, other: "VirtualChar") -> "VirtualChar":
        return VirtualChar(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return VirtualChar(self.table, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def degree(self) -> int:
        return sum(c * d for c, d in zip(self.coeffs, self.table.degrees))


def irr_table(G: FiniteGroup, bound: int = MAX_ORDER) -> IrrTable:
    """Irreducible characters of G by monomial induction."""
    if G.size > bound:
        raise GroupError(f"group order {G.size} exceeds bound {bound}")
    cached = G.__dict__.get("_irr_table")
    if cached is not None:
        return cached
    e = G.exponent
    reps_g = G.class_reps
    found: dict = {}

    def add(values: tuple, rep: MonomialRep):
        if values not in found:
            found[values] = rep

    G_all = tuple(range(G.size))
    for k in linear_character_exponents(G):
        vals = tuple(CycNum.from_exponents(e, {k[r]: 1}) for r in reps_g)
        add(vals, MonomialRep.build(G, G_all, {g: k[g] for g in G_all}))
    total = len(found)
    if total < G.size:
        sizes = G.class_sizes
        for H in sorted(G.subgroups, key=lambda s: (-len(s), sorted(s))):
            d = G.size // len(H)
            if d == 1 or total + d * d > G.size:
                continue
            sub = G.subgroup(H)
            lin = linear_character_exponents(sub.group)
            scale = e // sub.group.exponent
            for k in lin:
                lam = {sub.embed[i]: k[i] * scale % e for i in range(len(H))}
                counts = [dict() for _ in reps_g]
                for h, kh in lam.items():
                    c = G.class_of[h]
                    counts[c][kh] = counts[c].get(kh, 0) + 1
                vals = tuple(
                    CycNum.from_exponents(e, cnt) * Fraction(G.size, sizes[c] * len(H))
                    for c, cnt in enumerate(counts))
                if vals in found:
                    continue
                norm = sum((sizes[c] * (v * v.conj()) for c, v in enumerate(vals)), zero(e))
                if norm.as_rational() != G.size:
                    continue
                add(vals, MonomialRep.build(G, H, lam))
                total += d * d
                if total == G.size:
                    break
            if total == G.size:
                break
    if total != G.size:
        raise GroupError("group not monomial within bound")
    triv = tuple(one(e) for _ in reps_g)

    def key_fn(item):
        vals = item[0]
        return (int(vals[0].as_rational()), vals != triv, tuple(v.coeffs for v in vals))

    items = sorted(found.items(), key=key_fn)
    table = IrrTable(G, [list(v) for v, _ in items], [r for _, r in items])
    G.__dict__["_irr_table"] = table
    return table


# -- restriction / induction / inflation ---------------------------------------

def restrict(table: IrrTable, values: Sequence[CycNum], sub: Subgroup) -> list:
    G = table.group
    H = sub.group
    return [values[G.class_of[sub.embed[r]]] for r in H.class_reps]


def induce(sub: Subgroup, values: Sequence[CycNum], G_table: IrrTable) -> list:
    """ind_H^G of a class function on H given by values on H's classes."""
    G = sub.parent
    H = sub.group
    e = G.exponent
    acc = [zero(e) for _ in G.classes]
    for h in range(H.size):
        c = G.class_of[sub.embed[h]]
        acc[c] = acc[c] + values[H.class_of[h]]
    return [acc[c] * Fraction(G.size, len(G.classes[c]) * H.size) for c in range(len(G.classes))]


def inflate(quot: Quotient, values: Sequence[CycNum]) -> list:
    G = quot.parent
    Q = quot.group
    return [values[Q.class_of[quot.proj[r]]] for r in G.class_reps]


def group_element_det(table: IrrTable, i: int, g: int) -> CycNum:
    return table.det_of({g: one()}, i)
