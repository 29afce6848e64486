"""Exact arithmetic in cyclotomic fields.

A :class:`CycNum` is an element of Q(zeta_n) stored in the power basis
1, zeta, ..., zeta^(phi(n)-1), i.e. reduced modulo the n-th cyclotomic
polynomial.  Polynomial arithmetic is delegated to FLINT's ``fmpq_poly``;
everything stays exact.

>>> z3 = zeta(3)
>>> z3 + z3**2 == -1
True
>>> zeta(5).inverse() == zeta(5, 4)
True
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import flint

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> flint.fmpq_poly:
    return flint.fmpq_poly(flint.fmpz_poly.cyclotomic(n))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return cyclotomic_poly(n).degree()


def _mobius(n: int) -> int:
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple:
    # normalized traces Tr(zeta_n^i)/phi(n) via Ramanujan sums
    phi = euler_phi(n)
    out = []
    for i in range(phi):
        q = n // math.gcd(i, n)
        out.append(Fraction(_mobius(q), euler_phi(q)))
    return tuple(out)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class CycNum:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("order", "_poly", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Rational] = ()):
        if order < 1:
            raise ValueError("order must be positive")
        poly = flint.fmpq_poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator)
                                for c in coeffs])
        self.order = order
        self._poly = poly % cyclotomic_poly(order) if poly.degree() >= euler_phi(order) else poly
        self._hash = None

    @classmethod
    def _raw(cls, order: int, poly: flint.fmpq_poly) -> "CycNum":
        obj = cls.__new__(cls)
        obj.order = order
        obj._poly = poly
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, order: int, terms: Mapping[int, Rational] | Iterable[tuple]) -> "CycNum":
        """Build sum c * zeta_order^e from (e, c) pairs; exponents are taken mod order."""
        vec = [0] * order
        items = terms.items() if isinstance(terms, Mapping) else terms
        dens = False
        for e, c in items:
            vec[e % order] += c
            dens = dens or isinstance(c, Fraction)
        if dens:
            poly = flint.fmpq_poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator)
                                    for c in vec])
        else:
            poly = flint.fmpq_poly(vec)
        return cls._raw(order, poly % cyclotomic_poly(order))

    @classmethod
    def rational(cls, q: Rational, order: int = 1) -> "CycNum":
        q = Fraction(q)
        return cls._raw(order, flint.fmpq_poly([flint.fmpq(q.numerator, q.denominator)]))

    # -- canonical data -------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        """Canonical power-basis coefficients, length phi(order)."""
        cs = [_to_fraction(c) for c in self._poly.coeffs()]
        return tuple(cs + [Fraction(0)] * (euler_phi(self.order) - len(cs)))

    @property
    def degree(self) -> int:
        return euler_phi(self.order)

    def embed(self, order: int) -> "CycNum":
        """View self inside Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        cs = self._poly.coeffs()
        vec = [flint.fmpq(0)] * (step * max(len(cs) - 1, 0) + 1)
        for i, c in enumerate(cs):
            vec[i * step] = c
        return CycNum._raw(order, flint.fmpq_poly(vec) % cyclotomic_poly(order))

    def _common(self, other) -> tuple:
        if not isinstance(other, CycNum):
            other = CycNum.rational(other, self.order)
            return self, other
        if other.order == self.order:
            return self, other
        n = math.lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    # -- field operations -----------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, CycNum):
            a, b = self._common(other)
            return CycNum._raw(a.order, a._poly + b._poly)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.order, -self._poly)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, CycNum):
            a, b = self._common(other)
            return CycNum._raw(a.order, a._poly - b._poly)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._raw(self.order, self._poly * flint.fmpq(q.numerator, q.denominator))
        if isinstance(other, CycNum):
            a, b = self._common(other)
            return CycNum._raw(a.order, (a._poly * b._poly) % cyclotomic_poly(a.order))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self._poly.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self._poly.degree() == 0:
            return CycNum._raw(self.order, flint.fmpq_poly([1 / self._poly.coeffs()[0]]))
        if euler_phi(self.order) > 48:
            # Gauss and Jacobi sums have rational absolute square; xgcd is slow at high degree
            c = self.conj()
            r = (self * c).as_rational()
            if r is not None:
                return c * (1 / r)
        g, s, _= self._poly.xgcd(cyclotomic_poly(self.order))
        # Phi_n is irreducible, so the gcd is a nonzero constant
        return CycNum._raw(self.order, (s / g.coeffs()[0]) % cyclotomic_poly(self.order))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CycNum):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return CycNum.rational(1, self.order)
        res = None
        base = self
        while e:
            if e & 1:
                res = base if res is None else res * base
            e >>= 1
            if e:
                base = base * base
        return res

    # -- Galois action and evaluation -----------------------------------
    def galois_apply(self, k: int) -> "CycNum":
        """Apply zeta_n -> zeta_n^k."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to {n}")
        k %= n
        cs = self._poly.coeffs()
        if k == 1 or len(cs) <= 1:
            return self
        vec = [flint.fmpq(0)] * n
        for i, c in enumerate(cs):
            vec[(i * k) % n] += c
        return CycNum._raw(n, flint.fmpq_poly(vec) % cyclotomic_poly(n))

    def conj(self) -> "CycNum":
        return self.galois_apply(-1)

    def complex_value(self) -> complex:
        n = self.order
        total = 0j
        for i, c in enumerate(self._poly.coeffs()):
            if c != 0:
                total += float(_to_fraction(c)) * cmath.exp(2j * math.pi * i / n)
        return total

    def as_rational(self) -> Fraction | None:
        if self._poly.degree() <= 0:
            cs = self._poly.coeffs()
            return _to_fraction(cs[0]) if cs else Fraction(0)
        return None

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def normalized_trace(self) -> Fraction:
        """Tr(x)/[Q(zeta_n):Q]; independent of the ambient order."""
        w = _trace_weights(self.order)
        return sum((_to_fraction(c) * w[i] for i, c in enumerate(self._poly.coeffs())),
                   Fraction(0))

    def denominator(self) -> int:
        return int(self._poly.denom())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = self.as_rational()
            return r is not None and r == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._common(other)
        return a._poly == b._poly

    def __hash__(self):
        if self._hash is None:
            r = self.as_rational()
            self._hash = hash(r) if r is not None else hash(("cyc", self.normalized_trace()))
        return self._hash

    def __bool__(self):
        return not self._poly.is_zero()

    def sort_key(self) -> tuple:
        return (self.order, self.coeffs)

    def __repr__(self):
        return f"CycNum({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CycNum":
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])


def zeta(n: int, k: int = 1) -> CycNum:
    """The root of unity zeta_n^k."""
    return CycNum.from_exponents(n, {k % n: 1})


def one(order: int = 1) -> CycNum:
    return CycNum.rational(1, order)


def zero(order: int = 1) -> CycNum:
    return CycNum.rational(0, order)


def det(matrix: list) -> CycNum:
    """Determinant of a square matrix with CycNum (or rational) entries, by elimination."""
    n = len(matrix)
    if n == 0:
        return one()
    rows = [[x if isinstance(x, CycNum) else CycNum.rational(x) for x in row] for row in matrix]
    result = one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return zero()
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result
        p = rows[col][col]
        result = result * p
        p_inv = p.inverse()
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * p_inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return result
