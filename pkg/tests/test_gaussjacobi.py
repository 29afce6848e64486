import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from relkgauss.cyclonum import CycNum, one, zeta
from relkgauss.gaussjacobi import (AbelianField, DirichletChar, EquivariantValue, LocalAbelianChar,
                                   ReciprocityTable, adams_twist, base_package, brauer_induction_gauss,
                                   dirichlet_characters, galois_jacobi, gauss_sum, jacobi_sum,
                                   label_product_sides, local_galois_gauss, primitive_characters,
                                   resolvent, table_gauss_sum, tau_package, tau_prime,
                                   unit_group, verify_label_product, y_char, y_package)

PRIMES = [3, 5, 7, 11, 13]


def brute_primitive_root(p):
    return next(g for g in range(2, p) if len({pow(g, k, p) for k in range(p - 1)}) == p - 1)


def brute_char(p, a):
    """chi(g^k) = exp(2 pi i a k / (p-1)) for the least primitive root g, as a numeric function."""
    g = brute_primitive_root(p)
    log = {pow(g, k, p): k for k in range(p - 1)}
    return (lambda x: 0 if x % p == 0 else cmath.exp(2j * math.pi * a * log[x % p] / (p - 1))), log


def library_char(p, a):
    _, log = brute_char(p, a)
    return DirichletChar.from_function(p, lambda x: a * log[x % p], p - 1)


@pytest.mark.parametrize("p", PRIMES)
def test_gauss_sums_against_brute_force(p):
    for a in range(1, p - 1):
        f, _ = brute_char(p, a)
        expected = sum(f(x) * cmath.exp(2j * math.pi * x / p) for x in range(p))
        assert abs(gauss_sum(library_char(p, a)).complex_value() - expected) < 1e-9


@pytest.mark.parametrize("p", PRIMES)
def test_jacobi_sums_against_brute_force(p):
    for a in range(p - 1):
        for b in range(p - 1):
            f1, _ = brute_char(p, a)
            f2, _ = brute_char(p, b)
            # trivial character takes value 1 on units and 0 at multiples of p
            expected = sum(f1(x) * f2(1 - x) for x in range(p))
            got = jacobi_sum(library_char(p, a), library_char(p, b)).complex_value()
            assert abs(got - expected) < 1e-9


def test_quadratic_gauss_sums():
    for p in PRIMES:
        chi = library_char(p, (p - 1) // 2)
        tau = gauss_sum(chi)
        assert tau * tau == chi.parity() * p
    assert gauss_sum(library_char(5, 2)) == zeta(5) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4)


def test_jacobi_trivial_convention():
    chi = library_char(7, 1)
    assert jacobi_sum(DirichletChar.trivial(7), chi) == -1


def test_cubic_jacobi_norm():
    # |J(chi, chi)|^2 = p for the cubic character mod 7
    chi = library_char(7, 2)
    J = jacobi_sum(chi, chi)
    assert J * J.conj() == 7


def test_conductor_and_primitive():
    chis = dirichlet_characters(12)
    conds = sorted(c.conductor for c in chis)
    assert conds == [1, 3, 4, 12]
    chi3 = next(c for c in chis if c.conductor == 3)
    assert chi3.primitive().modulus == 3
    assert chi3.primitive().induce(12) == chi3
    assert len(primitive_characters(12)) == 1
    assert sum(len(primitive_characters(f)) for f in range(1, 51)) == 471


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 8, 9, 11, 13, 15, 16, 20, 21]), st.data())
def test_gauss_sum_identities(m, data):
    prims = primitive_characters(m)
    if not prims:
        return
    chi = data.draw(st.sampled_from(prims))
    tau = gauss_sum(chi)
    assert abs(abs(tau.complex_value()) ** 2 - m) < 1e-9
    assert tau * gauss_sum(chi.conj()) == chi.parity() * m


def test_unit_group_generators():
    for m in (8, 9, 12, 15, 16, 63):
        ug = unit_group(m)
        assert math.prod(ug.orders) == len(ug.units)
        assert len(ug.logs) == len(ug.units)


def test_local_sums():
    chi = library_char(5, 1)
    u = zeta(3)
    phi = LocalAbelianChar(5, chi, u)
    assert phi.conductor_exponent == 1
    assert local_galois_gauss(phi, 5) == u.inverse() * gauss_sum(chi.conj())
    unram = LocalAbelianChar(5, DirichletChar.trivial(1), u)
    assert local_galois_gauss(unram, 5) == 1
    with pytest.raises(ValueError, match="reciprocity table"):
        local_galois_gauss(phi, 5, base="Q_25")


def test_table_gauss_sum_and_brauer_induction():
    chi = library_char(7, 2)
    table = ReciprocityTable(7, tuple((a, a) for a in range(1, 7)))
    assert table_gauss_sum(table, chi) == gauss_sum(chi)
    assert ReciprocityTable.from_json({"additive_order": 7, "pairs": [[1, 1]]}).entries == ((1, 1),)
    assert brauer_induction_gauss(gauss_sum(chi), [gauss_sum(chi.conj())]) == chi.parity() * 7


CYCLIC = [(7, 3), (11, 5), (29, 7), (9, 3)]


@pytest.mark.parametrize("m,d", CYCLIC)
def test_label_product(m, d):
    F = AbelianField.cyclic_subfield(m, d)
    tau, y = tau_package(F), y_package(F)
    assert verify_label_product(tau, tau_prime(tau, y), base_package(F.table) * tau, y)
    lhs, rhs = label_product_sides(tau, tau_prime(tau, y), base_package(F.table, 3) * tau, y, 3)
    assert lhs == rhs


@pytest.mark.parametrize("m,d", CYCLIC)
def test_galois_jacobi_rational(m, d):
    F = AbelianField.cyclic_subfield(m, d)
    J, ok = galois_jacobi(tau_package(F), 2)
    assert ok
    bumped = EquivariantValue(J.table, (J.values[0],) + (J.values[1] * 2,) + J.values[2:])
    assert not bumped.is_equivariant()
    # the raw Gauss sum package is not rational
    assert not tau_package(F).is_equivariant()


def test_y_values():
    F = AbelianField.cyclic_subfield(7, 3)
    d = F.ramification_datum(7)
    T = F.table
    assert [y_char(d, T, i) for i in range(3)] == [-1, 1, 1]
    # the compositum of conductor 63: at 3 inertia is a proper subgroup
    G = AbelianField(63, [8, 55])
    d3 = G.ramification_datum(3)
    assert len(d3.inertia) == 3
    unram = [i for i in range(len(G.table)) if all(G.table.value(i, h) == 1 for h in d3.inertia)]
    assert len(unram) == 3
    for i in unram:
        assert y_char(d3, G.table, i) == -G.table.value(i, d3.sigma)


def test_field_structure():
    F = AbelianField.cyclic_subfield(9, 3)
    assert F.degree == 3 and F.ramified_primes() == [3]
    assert len(F.inertia(3)) == 3
    G = AbelianField(63, [8, 55])
    assert G.degree == 9 and G.ramified_primes() == [3, 7]
    with pytest.raises(ValueError):
        AbelianField.cyclic_subfield(63, 9)


def test_resolvents_of_root_of_unity_are_corrected_gauss_sums():
    F = AbelianField(7)
    tp = tau_prime(tau_package(F), y_package(F))
    for i in range(len(F.table)):
        assert resolvent(zeta(7), F, i) == tp.values[i]


def test_gauss_period_resolvents_against_numeric():
    F = AbelianField.cyclic_subfield(7, 3)
    b = sum((zeta(7, h) for h in sorted(F.H)), CycNum.rational(0, 7))
    G = F.gamma
    for i in range(3):
        expected = sum(cmath.exp(2j * math.pi * F.lift(g) * h / 7) * F.table.value(i, G.inv[g]).complex_value()
                       for g in range(3) for h in F.H)
        assert abs(resolvent(b, F, i).complex_value() - expected) < 1e-9
    with pytest.raises(ValueError):
        resolvent(zeta(7), F, 0)


def test_adams_twist_components():
    F = AbelianField.cyclic_subfield(7, 3)
    x = tau_package(F)
    tw = adams_twist(x, 1, -1, 2)
    T = F.table
    for i in range(3):
        assert tw.values[i] == x.values[i] / x.values[T.adams_index(i, 2)]
    assert adams_twist(x, 1, 0, 2) == x
    assert base_package(T, 2).values == tuple(CycNum.rational(2) for _ in range(3))
    assert EquivariantValue.constant(T, one()).is_equivariant()
