"""Dirichlet characters, Gauss and Jacobi sums, and equivariant Gauss-sum packages.

Conventions
-----------
* ``gauss_sum(chi)`` is the classical sum over the primitive character
  inducing chi: sum_{a mod f} chi*(a) zeta_f^a.
* Galois characters of an abelian field L inside Q(zeta_m) are identified with
  Dirichlet characters through sigma_a: zeta_m -> zeta_m^a.
* Local reciprocity is normalized so that a unit u acts on p-power roots of
  unity by zeta -> zeta^(u^-1) and the uniformizer p acts as arithmetic
  Frobenius.  With the additive character x -> exp(2 pi i {x}_p) this makes
  the Galois-Gauss sum of a Galois character chi equal to gauss_sum of the
  conjugate Dirichlet character, which is also the resolvent (zeta_f | chi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from .cyclonum import CycNum, one, zeta, zero
from .groups import FiniteGroup, IrrTable, irr_table


def factorize(n: int) -> dict:
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _primitive_root(p: int) -> int:
    qs = factorize(p - 1)
    return next(g for g in range(2, p + 1) if all(pow(g, (p - 1) // q, p) != 1 for q in qs))


@dataclass(frozen=True)
class UnitGroup:
    """(Z/m)^x with a fixed generating set, one generator per cyclic factor."""

    modulus: int
    gens: tuple
    orders: tuple

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @cached_property
    def units(self) -> list:
        return [a for a in range(self.modulus) if math.gcd(a, self.modulus) == 1]

    @cached_property
    def logs(self) -> dict:
        """residue -> tuple of discrete logs with respect to gens."""
        m = self.modulus
        table = {1 % m: tuple(0 for _ in self.gens)}
        for i, (g, o) in enumerate(zip(self.gens, self.orders)):
            new = {}
            for a, vec in table.items():
                x = a
                for k in range(o):
                    v = list(vec)
                    v[i] = k
                    new[x] = tuple(v)
                    x = x * g % m
            table = new
        return table


@lru_cache(maxsize=None)
def unit_group(m: int) -> UnitGroup:
    if m < 1:
        raise ValueError("modulus must be positive")
    gens, orders = [], []
    for p, a in sorted(factorize(m).items()):
        q = p ** a
        rest = m // q

        def lift(x):
            # x mod q, 1 mod rest
            if rest == 1:
                return x % m
            return (x * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % m

        if p == 2:
            if a == 2:
                gens.append(lift(-1)); orders.append(2)
            elif a >= 3:
                gens.append(lift(-1)); orders.append(2)
                gens.append(lift(5)); orders.append(q // 4)
        else:
            g = _primitive_root(p)
            if a > 1 and pow(g, p - 1, p * p) == 1:
                g += p
            gens.append(lift(g)); orders.append(q - q // p)
    return UnitGroup(m, tuple(gens), tuple(orders))


class DirichletChar:
    """A Dirichlet character mod m, given by exponents on the generators of (Z/m)^x.

    The value at generator i is zeta_{o_i}^{exps[i]} with o_i the order of that generator.
    """

    __slots__ = ("modulus", "exps", "_ug", "_N", "_cache")

    def __init__(self, modulus: int, exps: Sequence[int]):
        ug = unit_group(modulus)
        if len(exps) != len(ug.gens):
            raise ValueError(f"need {len(ug.gens)} generator values mod {modulus}")
        self.modulus = modulus
        self.exps = tuple(int(e) % o for e, o in zip(exps, ug.orders))
        self._ug = ug
        self._N = ug.exponent
        self._cache = {}

    @classmethod
    def trivial(cls, modulus: int) -> "DirichletChar":
        return cls(modulus, [0] * len(unit_group(modulus).gens))

    @classmethod
    def from_function(cls, modulus: int, exponent_of: Callable[[int], int], order: int) -> "DirichletChar":
        """Character with chi(a) = zeta_order^{exponent_of(a)}; checked on generators only."""
        ug = unit_group(modulus)
        exps = []
        for g, o in zip(ug.gens, ug.orders):
            k = exponent_of(g) % order
            if (k * o) % order:
                raise ValueError("values are not compatible with generator orders")
            exps.append(k * o // order)
        return cls(modulus, exps)

    @property
    def value_order(self) -> int:
        return self._N

    def exponent(self, a: int) -> int | None:
        """k with chi(a) = zeta_N^k (N = exponent of the unit group), None if gcd(a,m) > 1."""
        a %= self.modulus
        logs = self._ug.logs.get(a)
        if logs is None:
            return None
        N = self._N
        return sum(e * l * (N // o) for e, l, o in zip(self.exps, logs, self._ug.orders)) % N

    def __call__(self, a: int) -> CycNum:
        k = self.exponent(a)
        if k is None:
            return zero(self._N)
        return zeta(self._N, k)

    @property
    def gen_values(self) -> tuple:
        return tuple(zeta(o, e) for e, o in zip(self.exps, self._ug.orders))

    def __eq__(self, other):
        return isinstance(other, DirichletChar) and (self.modulus, self.exps) == (other.modulus, other.exps)

    def __hash__(self):
        return hash((self.modulus, self.exps))

    def __repr__(self):
        return f"DirichletChar(mod {self.modulus}, exps={self.exps})"

    def __mul__(self, other: "DirichletChar") -> "DirichletChar":
        if self.modulus != other.modulus:
            raise ValueError("characters have different moduli")
        return DirichletChar(self.modulus, [a + b for a, b in zip(self.exps, other.exps)])

    def __pow__(self, k: int) -> "DirichletChar":
        return DirichletChar(self.modulus, [a * k for a in self.exps])

    def conj(self) -> "DirichletChar":
        return self ** -1

    def is_trivial(self) -> bool:
        return not any(self.exps)

    @property
    def order(self) -> int:
        return math.lcm(*[o // math.gcd(o, e) for e, o in zip(self.exps, self._ug.orders)]) if self.exps else 1

    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        k = self.exponent(-1)
        return 1 if k == 0 else -1

    @property
    def conductor(self) -> int:
        if "f" in self._cache:
            return self._cache["f"]
        m = self.modulus
        self._cache["f"] = next(
            f for f in range(1, m + 1) if m % f == 0
            and all(self.exponent(a) == 0 for a in range(1, m, f) if math.gcd(a, m) == 1))
        return self._cache["f"]

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def primitive(self) -> "DirichletChar":
        f = self.conductor
        if f == self.modulus:
            return self

        def lift(a):
            t = a % f if f > 1 else 1
            while math.gcd(t, self.modulus) != 1:
                t += f
            return t

        return DirichletChar.from_function(f, lambda a: self.exponent(lift(a)), self._N)

    def induce(self, modulus: int) -> "DirichletChar":
        """The character mod `modulus` induced by self (modulus must be a multiple)."""
        if modulus % self.modulus:
            raise ValueError("target modulus must be a multiple")
        return DirichletChar.from_function(modulus, lambda a: self.exponent(a % self.modulus), self._N)


def dirichlet_characters(m: int) -> list:
    ug = unit_group(m)
    out = [[]]
    for o in ug.orders:
        out = [v + [k] for v in out for k in range(o)]
    return [DirichletChar(m, v) for v in out]


def primitive_characters(f: int) -> list:
    return [c for c in dirichlet_characters(f) if c.conductor == f]


def gauss_sum(chi: DirichletChar) -> CycNum:
    """sum_{a mod f} chi*(a) zeta_f^a over the primitive character chi* inducing chi."""
    prim = chi.primitive()
    f = prim.modulus
    N = prim.value_order
    M = math.lcm(f, N)
    terms = {}
    for a in unit_group(f).units:
        k = prim.exponent(a)
        e = ((M // N) * k + (M // f) * a) % M
        terms[e] = terms.get(e, 0) + 1
    return CycNum.from_exponents(M, terms)


def jacobi_sum(chi: DirichletChar, chi2: DirichletChar) -> CycNum:
    """sum_a chi(a) chi2(1-a) over a mod m, with chi(a) = 0 when gcd(a, m) > 1.

    With this convention J(1, chi2) = -1 for chi2 nontrivial mod a prime.
    """
    if chi.modulus != chi2.modulus:
        raise ValueError("Jacobi sum needs a common modulus")
    m = chi.modulus
    N = chi.value_order
    terms = {}
    for a in range(m):
        k1 = chi.exponent(a)
        k2 = chi2.exponent(1 - a)
        if k1 is None or k2 is None:
            continue
        terms[(k1 + k2) % N] = terms.get((k1 + k2) % N, 0) + 1
    return CycNum.from_exponents(N, terms)


# -- local Gauss sums ----------------------------------------------------------

@dataclass(frozen=True)
class LocalAbelianChar:
    """Character of Gal(Q_p^ab/Q_p): ramified part on Gal(Q_p(zeta_{p^inf})/Q_p) via sigma_a,
    unramified part given by its value at arithmetic Frobenius."""

    p: int
    ramified: DirichletChar
    frobenius_value: CycNum

    def __post_init__(self):
        m = self.ramified.modulus
        if m != 1 and set(factorize(m)) != {self.p}:
            raise ValueError("ramified part must have p-power modulus")

    def is_unramified(self) -> bool:
        return self.ramified.is_trivial()

    @property
    def conductor_exponent(self) -> int:
        f = self.ramified.conductor
        n = 0
        while f > 1:
            f //= self.p
            n += 1
        return n


def local_galois_gauss(phi: LocalAbelianChar, p: int, base: str = "Q_p") -> CycNum:
    """Local Galois-Gauss sum over Q_p in the pinned normalization.

    For conductor p^n the value is u^-n * gauss_sum(conj(chi)), u the Frobenius value.
    """
    if base != "Q_p" or phi.p != p:
        raise ValueError("reciprocity table required")
    n = phi.conductor_exponent
    if n == 0:
        return one()
    return phi.frobenius_value ** (-n) * gauss_sum(phi.ramified.conj())


@dataclass(frozen=True)
class ReciprocityTable:
    """Injected local data for a ramified abelian character psi of a local field M:
    for each x in O_M^x / U^(2), the additive value psi_add(x/c) = zeta_{additive_order}^k
    and the group element rec(x/c)."""

    additive_order: int
    entries: tuple  # pairs (k, group element index)

    @classmethod
    def from_json(cls, data: dict) -> "ReciprocityTable":
        return cls(int(data["additive_order"]), tuple((int(k), int(g)) for k, g in data["pairs"]))


def table_gauss_sum(table: ReciprocityTable, psi: Callable[[int], CycNum]) -> CycNum:
    """tau(M, psi) = sum_x psi(rec(x/c)) psi_add(x/c)."""
    total = zero()
    for k, g in table.entries:
        total = total + psi(g) * zeta(table.additive_order, k)
    return total


def brauer_induction_gauss(tau_M_psi: CycNum, abelian_taus: Iterable[CycNum]) -> CycNum:
    """tau(Q_p, ind_A^G psi) = tau(M_p, psi) * prod tau(Q_p, phi) over phi trivial on A."""
    out = tau_M_psi
    for t in abelian_taus:
        out = out * t
    return out


# -- abelian fields inside cyclotomic fields --------------------------------------

class AbelianField:
    """The fixed field L of a subgroup H of (Z/m)^x acting on Q(zeta_m).

    Gamma = Gal(L/Q) is modeled as (Z/m)^x / H with elements labelled by the
    smallest residue in each coset.
    """

    def __init__(self, m: int, H: Iterable[int] = (1,), name: str | None = None):
        ug = unit_group(m)
        Hs = set(h % m for h in H) | {1 % m}
        # close H under multiplication
        frontier = list(Hs)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(Hs):
                    c = a * b % m
                    if c not in Hs:
                        Hs.add(c)
                        nxt.append(c)
            frontier = nxt
        if any(math.gcd(h, m) != 1 for h in Hs):
            raise ValueError("H must consist of units")
        self.m = m
        self.H = frozenset(Hs)
        self.name = name or f"Q(zeta_{m})^H{len(Hs)}"
        coset_rep = {}
        reps = []
        for a in ug.units:
            if a in coset_rep:
                continue
            for h in Hs:
                coset_rep[a * h % m] = a
            reps.append(a)
        self.reps = reps
        self._rep_of = coset_rep
        self.gamma = FiniteGroup.from_function(reps, lambda a, b: coset_rep[a * b % m],
                                               name=f"Gal({self.name})")

    @classmethod
    def cyclic_subfield(cls, m: int, degree: int) -> "AbelianField":
        """Subfield of degree `degree` of Q(zeta_m); (Z/m)^x must be cyclic."""
        ug = unit_group(m)
        if len(ug.gens) != 1 or ug.orders[0] % degree:
            raise ValueError("no unique cyclic subfield of that degree")
        g = ug.gens[0]
        return cls(m, [pow(g, degree, m)], name=f"deg{degree}(Q(zeta_{m}))")

    @property
    def degree(self) -> int:
        return self.gamma.size

    def element(self, a: int) -> int:
        """Index in gamma of sigma_a."""
        return self.gamma.index_of(self._rep_of[a % self.m])

    def lift(self, g: int) -> int:
        return self.gamma.labels[g]

    @cached_property
    def table(self) -> IrrTable:
        return irr_table(self.gamma)

    def char_exponents(self, i: int) -> list:
        """For linear chi_i: exponents k_g with chi_i(g) = zeta_{exp Gamma}^{k_g}."""
        rep = self.table.reps[i]
        return [rep.lam[g] for g in range(self.gamma.size)]

    def dirichlet(self, i: int) -> DirichletChar:
        e = self.gamma.exponent
        ks = self.char_exponents(i)
        return DirichletChar.from_function(self.m, lambda a: ks[self.element(a)], e)

    def inertia(self, p: int) -> frozenset:
        a = 0
        m = self.m
        while m % p == 0:
            m //= p
            a += 1
        if a == 0:
            return frozenset([self.gamma.identity])
        return frozenset(self.element(u) for u in unit_group(self.m).units if (u - 1) % m == 0)

    def frobenius(self, p: int) -> int:
        """A Frobenius lift at p: sigma_a with a = p mod m' and a = 1 mod the p-part."""
        m = self.m
        q = 1
        while m % p == 0:
            m //= p
            q *= p
        if m == 1:
            return self.gamma.identity
        a = next(x for x in range(1, self.m) if x % m == p % m and (x - 1) % q == 0)
        return self.element(a)

    def ramified_primes(self) -> list:
        return [p for p in sorted(factorize(self.m)) if len(self.inertia(p)) > 1]

    def contains(self, b: CycNum) -> bool:
        if self.m % b.order:
            return False
        bm = b.embed(self.m)
        return all(bm.galois_apply(h) == bm for h in self.H)

    def act(self, g: int, b: CycNum) -> CycNum:
        return b.embed(self.m).galois_apply(self.lift(g))

    def ramification_datum(self, p: int) -> "RamificationDatum":
        return RamificationDatum(self.gamma, self.inertia(p), self.frobenius(p),
                                 weakly_ramified=True)


# -- ramification data and y -------------------------------------------------------

@dataclass(frozen=True)
class RamificationDatum:
    group: FiniteGroup
    inertia: frozenset
    sigma: int
    weakly_ramified: bool = True

    def __post_init__(self):
        G = self.group
        if not G.is_subgroup(self.inertia) or not G.is_normal(self.inertia):
            raise ValueError("inertia must be a normal subgroup")
        Q = G.quotient(self.inertia)
        s = Q.proj[self.sigma]
        if len(Q.group.closure([s])) != Q.group.size:
            raise ValueError("Gamma/I must be cyclic, generated by the image of sigma")


def _is_trivial_on(table: IrrTable, i: int, elems: Iterable[int]) -> bool:
    d = table.degrees[i]
    return all(table.value(i, h) == d for h in elems)


def y_char(d: RamificationDatum, table: IrrTable, phi) -> CycNum:
    """Unramified characteristic: 1 if phi|_I != 1, else -phi(sigma); multiplicative on R_Gamma.

    `phi` is an irreducible index or a VirtualChar.
    """
    if isinstance(phi, int):
        if not _is_trivial_on(table, phi, d.inertia):
            return one(table.exponent)
        return -table.value(phi, d.sigma)
    out = one(table.exponent)
    for i, c in enumerate(phi.coeffs):
        if c:
            out = out * y_char(d, table, i) ** c
    return out


# -- equivariant values ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EquivariantValue:
    """An element sum_chi e_chi x_chi of the centre of Q^c[Gamma]^x."""

    table: IrrTable
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.table):
            raise ValueError("one value per irreducible character is required")

    @classmethod
    def constant(cls, table: IrrTable, c=1) -> "EquivariantValue":
        v = c if isinstance(c, CycNum) else CycNum.rational(c)
        return cls(table, tuple(v for _ in range(len(table))))

    def __getitem__(self, i: int) -> CycNum:
        return self.values[i]

    def is_invertible(self) -> bool:
        return all(bool(v) for v in self.values)

    def __mul__(self, other: "EquivariantValue") -> "EquivariantValue":
        return EquivariantValue(self.table, tuple(a * b for a, b in zip(self.values, other.values)))

    def __truediv__(self, other: "EquivariantValue") -> "EquivariantValue":
        return EquivariantValue(self.table, tuple(a / b for a, b in zip(self.values, other.values)))

    def __pow__(self, k: int) -> "EquivariantValue":
        return EquivariantValue(self.table, tuple(a ** k for a in self.values))

    def inverse(self) -> "EquivariantValue":
        return self ** -1

    def __eq__(self, other):
        return isinstance(other, EquivariantValue) and self.values == other.values

    __hash__ = None

    def diff(self, other: "EquivariantValue") -> list:
        return [i for i, (a, b) in enumerate(zip(self.values, other.values)) if a != b]

    def is_equivariant(self) -> bool:
        """(x_chi)^omega = x_{chi^omega} for all omega in Gal(Q(zeta_N)/Q)."""
        if not self.is_invertible():
            return False
        e = self.table.exponent
        N = math.lcm(e, *[v.order for v in self.values])
        for k in unit_group(N).gens:
            for i, v in enumerate(self.values):
                j = self.table.galois_twist(i, k % e if e > 1 else 1)
                if v.galois_apply(k % v.order if v.order > 1 else 1) != self.values[j]:
                    return False
        return True

    def to_json(self) -> dict:
        return {"group": self.table.group.name,
                "entries": [{"char_index": i, "value": v.to_json()} for i, v in enumerate(self.values)]}


def assemble_equivariant(table: IrrTable, component: Callable[[int], CycNum]) -> EquivariantValue:
    vals = []
    for i in range(len(table)):
        v = component(i)
        if not isinstance(v, CycNum):
            v = CycNum.rational(v)
        if not v:
            raise ValueError(f"zero component at character {i}")
        vals.append(v)
    return EquivariantValue(table, tuple(vals))


def adams_twist(x: EquivariantValue, m: int, n: int, k: int) -> EquivariantValue:
    """(m + n psi_{k,*})(x): component chi is x_chi^m * x_{psi_k chi}^n."""
    T = x.table
    vals = []
    for i in range(len(T)):
        j = T.adams_index(i, k)
        vals.append(x.values[i] ** m * x.values[j] ** n)
    return EquivariantValue(T, tuple(vals))


def galois_jacobi(tau: EquivariantValue, k: int) -> tuple:
    """J_k = (psi_{k,*} - k)(tau) and whether it passes the rationality criterion."""
    J = adams_twist(tau, -k, 1, k)
    return J, J.is_equivariant()


def galois_gauss(F: AbelianField, i: int) -> CycNum:
    """tau(Q, chi_i) in the pinned normalization: gauss_sum of the conjugate Dirichlet character."""
    return gauss_sum(F.dirichlet(i).conj())


def tau_package(F: AbelianField) -> EquivariantValue:
    return assemble_equivariant(F.table, lambda i: galois_gauss(F, i))


def y_package(F: AbelianField) -> EquivariantValue:
    data = [F.ramification_datum(p) for p in F.ramified_primes()]

    def comp(i):
        out = one(F.table.exponent)
        for d in data:
            out = out * y_char(d, F.table, i)
        return out

    return assemble_equivariant(F.table, comp)


def tau_prime(tau: EquivariantValue, y: EquivariantValue) -> EquivariantValue:
    return tau / y


def base_package(table: IrrTable, t: CycNum | int = 1) -> EquivariantValue:
    """tau_K^Gamma: component t^chi(1) for a stand-in value t of tau(K, 1_K)-type data."""
    t = t if isinstance(t, CycNum) else CycNum.rational(t)
    return EquivariantValue(table, tuple(t ** d for d in table.degrees))


def tau_dagger(tau: EquivariantValue, t: CycNum | int = 1) -> EquivariantValue:
    return base_package(tau.table, t) * tau


def label_product_sides(tau, tau_p, tau_d, y, t: CycNum | int = 1) -> tuple:
    lhs = base_package(tau.table, t) * adams_twist(tau_p, -1, 1, 2) / tau_d
    J2, _ = galois_jacobi(tau, 2)
    rhs = J2 * adams_twist(y.inverse(), -1, 1, 2)
    return lhs, rhs


def verify_label_product(tau, tau_p, tau_d, y, t: CycNum | int = 1) -> bool:
    lhs, rhs = label_product_sides(tau, tau_p, tau_d, y, t)
    return lhs == rhs


# -- resolvents --------------------------------------------------------------------

def resolvent(b: CycNum, F: AbelianField, i: int) -> CycNum:
    """(b | chi) = det sum_g g(b) T_chi(g^-1); for linear chi this is sum_g g(b) chi(g)^-1."""
    if not F.contains(b):
        raise ValueError("b does not lie in L")
    T = F.table
    G = F.gamma
    conj_images = {g: F.act(g, b) for g in range(G.size)}
    if T.is_linear(i):
        total = zero(F.m)
        for g, gb in conj_images.items():
            total = total + gb * T.value(i, G.inv[g])
        return total
    return T.det_of({G.inv[g]: gb for g, gb in conj_images.items()}, i)


norm_resolvent = resolvent
