import flint
import pytest

from relkgauss import weakram as wr


def brute_is_irreducible(poly, p):
    # no root and no factor of degree <= deg/2, checked by trial division over all monic polys
    import itertools
    f = poly.degree()
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            q = flint.nmod_poly(list(tail) + [1], p)
            if poly % q == 0:
                return False
    return True


@pytest.mark.parametrize("p,f", [(3, 3), (5, 5), (7, 3), (2, 4), (13, 3)])
def test_irreducible_poly_and_frobenius(p, f):
    poly = wr.irreducible_poly(p, f)
    assert poly.degree() == f and brute_is_irreducible(poly, p)
    F = wr.frobenius_matrix(p, f)
    I = wr._identity(p, f)
    assert wr._power(F, f) == I
    assert all(wr._power(F, k) != I for k in range(1, f))


def test_element_of_order():
    assert pow(wr.element_of_order(7, 3), 3, 7) == 1
    assert wr.element_of_order(7, 3) != 1
    with pytest.raises(ValueError):
        wr.element_of_order(7, 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_p3_enumeration(p):
    classes = wr.enumerate_p3(p)
    assert len(classes) == p
    assert [c.exponent for c in classes].count(p) == 1
    assert all(c.is_ramified and not c.abelian for c in classes)
    assert sorted(c.label for c in classes) == sorted(f"pi*u^{b}" for b in range(p))
    assert {c.exponent for c in classes} == {p, p * p}


@pytest.mark.parametrize("l,p", [(3, 7), (3, 13), (5, 11)])
def test_l2p_enumeration(l, p):
    classes = wr.enumerate_l2p(l, p)
    assert len(classes) == l
    assert all(c.subgroup[1] == 1 for c in classes)  # Delta itself is excluded
    assert len({c.label for c in classes}) == l
    data = classes[0].to_json()
    assert set(data) == {"label", "is_ramified", "exponent", "abelian", "subgroup", "subfield"}


@pytest.mark.parametrize("args", [(2,), (9,)])
def test_p3_rejects_bad_primes(args):
    with pytest.raises(ValueError):
        wr.enumerate_p3(*args)


@pytest.mark.parametrize("l,p", [(3, 5), (2, 7), (3, 9)])
def test_l2p_rejects_bad_pairs(l, p):
    with pytest.raises(ValueError):
        wr.enumerate_l2p(l, p)


def test_coinvariants_examples():
    p = 5
    triv = wr.ResidueModule(p, 3, {"g": wr._identity(p, 3)}, {"g": 5})
    assert wr.coinvariants(triv)[0] == 3
    # regular representation of Z/5 over F_5: coinvariants are one-dimensional
    cyc = wr._mat(p, [[1 if i == (j + 1) % 5 else 0 for j in range(5)] for i in range(5)])
    reg = wr.ResidueModule(p, 5, {"g": cyc}, {"g": 5})
    assert wr.coinvariants(reg)[0] == 1
    assert wr.coinvariant_generator(reg) == 0
    # Frobenius on F_27 has one-dimensional coinvariants (the trace map)
    F27 = wr.ResidueModule(3, 3, {"f": wr.frobenius_matrix(3, 3)}, {"f": 3})
    assert wr.coinvariants(F27)[0] == 1
    # a scalar of order 3 in F_7 kills everything
    s = wr._mat(7, [[2, 0], [0, 2]])
    assert wr.coinvariants(wr.ResidueModule(7, 2, {"d": s}, {"d": 3}))[0] == 0
    with pytest.raises(ValueError):
        wr.coinvariant_generator(wr.ResidueModule(7, 2, {"d": s}, {"d": 3}))


def test_residue_module_validation():
    p = 3
    a = wr._mat(p, [[1, 1], [0, 1]])
    b = wr._mat(p, [[1, 0], [1, 1]])
    with pytest.raises(ValueError, match="commute"):
        wr.ResidueModule(p, 2, {"a": a, "b": b})
    with pytest.raises(ValueError, match="order"):
        wr.ResidueModule(p, 2, {"a": a}, {"a": 2})
    with pytest.raises(ValueError, match="size"):
        wr.ResidueModule(p, 3, {"a": a})
    with pytest.raises(ValueError):
        wr.ResidueModule(p, 2, {"a": a}).act({"a": -1})
    assert wr.ResidueModule(p, 2, {"a": a}, {"a": 3}).act({"a": -1}) == wr._power(a, 2)


@pytest.mark.parametrize("l,p", [(3, 7), (3, 13), (5, 11)])
def test_quotient_module_check(l, p):
    for H in wr.order_l_subgroups(l):
        expected = H != {"delta": 1}
        assert wr.quotient_module_check(l, p, H) is expected
    trivial = wr.ResidueModule(p, l, {"delta": wr._identity(p, l), "phi": wr._identity(p, l)},
                               {"delta": l, "phi": l})
    assert not wr.quotient_module_check(l, p, module=trivial)


def test_gamma_stability_and_quotient_action():
    M = wr.l2p_module(3, 7)
    w = wr.element_of_order(7, 3)
    for H in wr.order_l_subgroups(3)[1:]:
        assert wr._gamma_stable(M, H)
        act = wr._quotient_action(M, H)
        assert act["delta"] == w
        # H acts trivially on its own coinvariants
        assert act["phi"] * pow(act["delta"], H["delta"], 7) % 7 == 1
