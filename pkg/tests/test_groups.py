import itertools

import pytest
from hypothesis import given, settings, strategies as st

from relkgauss.cyclonum import CycNum, one, zero
from relkgauss.groups import (GroupError, MAX_ORDER, build_group, heisenberg, induce,
                              irr_table, modular, restrict, semidirect)

SPECS = ["cyclic:1", "cyclic:5", "cyclic:9", "abelian:3,3", "heisenberg:3", "modular:3",
         "metacyclic:3,3,7"]


def brute_force_class_count(G):
    seen, n = set(), 0
    for x in range(G.size):
        if x in seen:
            continue
        n += 1
        seen |= {G.conj(g, x) for g in range(G.size)}
    return n


@pytest.mark.parametrize("spec", SPECS)
def test_table_orthogonality_exact(spec):
    G = build_group(spec)
    T = irr_table(G)
    assert len(T) == brute_force_class_count(G)
    assert sum(d * d for d in T.degrees) == G.size
    for i, j in itertools.product(range(len(T)), repeat=2):
        assert T.inner(T.chars[i], T.chars[j]) == (1 if i == j else 0)
    # column orthogonality at the identity against every other class
    for c in range(1, len(G.classes)):
        r = G.class_reps[c]
        s = sum((T.value(i, G.identity) * T.value(i, r).conj() for i in range(len(T))), zero())
        assert s == 0


def test_order_27_groups():
    for G, exp in ((heisenberg(3), 3), (modular(3), 9)):
        T = irr_table(G)
        assert G.size == 27 and G.exponent == exp
        assert sorted(T.degrees) == [1] * 9 + [3, 3]
        assert len(G.center) == 3
        assert len(G.derived_subgroup) == 3


def test_metacyclic_degrees():
    T = irr_table(build_group("metacyclic:3,3,7"))
    assert sorted(T.degrees) == [1] * 9 + [3] * 6


def test_size_bound():
    assert MAX_ORDER == 200
    with pytest.raises(GroupError):
        irr_table(build_group("metacyclic:5,5,11"))


@pytest.mark.parametrize("spec", ["bogus:3", "cyclic", "cyclic:x", "metacyclic:3,2,7"])
def test_bad_specs(spec):
    with pytest.raises((GroupError, ValueError)):
        build_group(spec)


def test_frobenius_schur(quaternion):
    assert all(irr_table(semidirect(3, 2, 2)).fs_indicator(i) == 1 for i in range(3))
    T = irr_table(quaternion)
    assert sorted(T.fs_indicator(i) for i in range(len(T))) == [-1, 1, 1, 1, 1]
    assert len(T.symplectic()) == 1
    H = irr_table(heisenberg(3))
    assert [H.fs_indicator(i) for i in range(len(H))].count(1) == 1
    assert H.symplectic() == []


@pytest.mark.parametrize("spec", SPECS)
def test_monomial_representations(spec):
    G = build_group(spec)
    T = irr_table(G)
    for i, rep in enumerate(T.reps):
        for g in range(G.size):
            assert rep.trace(g) == T.value(i, g)
        for g, h in [(1 % G.size, G.size - 1), (G.size // 2, G.size // 3)]:
            Mg, Mh, Mgh = rep.matrix(g), rep.matrix(h), rep.matrix(G.mult[g][h])
            d = len(Mg)
            prod = [[sum((Mg[a][k] * Mh[k][b] for k in range(d)), zero()) for b in range(d)]
                    for a in range(d)]
            assert prod == Mgh


@pytest.mark.parametrize("spec,k", [("heisenberg:3", 2), ("modular:3", 2), ("cyclic:9", 4),
                                    ("metacyclic:3,3,7", 2)])
def test_adams_permutes_irreducibles(spec, k):
    T = irr_table(build_group(spec))
    images = [T.adams_index(i, k) for i in range(len(T))]
    assert sorted(images) == list(range(len(T)))
    assert all(T.degrees[j] == T.degrees[i] for i, j in enumerate(images))


def test_adams_needs_coprime():
    with pytest.raises(ValueError):
        irr_table(build_group("cyclic:6")).adams_index(1, 2)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["heisenberg:3", "modular:3", "abelian:3,3"]), st.data())
def test_frobenius_reciprocity(spec, data):
    G = build_group(spec)
    T = irr_table(G)
    subs = [S for S in G.subgroups if 1 < len(S) < G.size]
    sub = G.subgroup(data.draw(st.sampled_from(subs)))
    J = irr_table(sub.group)
    i = data.draw(st.integers(0, len(T) - 1))
    j = data.draw(st.integers(0, len(J) - 1))
    lhs = T.inner(induce(sub, J.chars[j], T), T.chars[i])
    rhs = J.inner(J.chars[j], restrict(T, T.chars[i], sub))
    assert lhs == rhs


def test_quotients_and_subgroups():
    G = heisenberg(3)
    Q = G.quotient(G.center)
    assert Q.group.size == 9 and Q.group.is_abelian()
    assert not G.is_abelian()
    with pytest.raises(GroupError):
        G.subgroup([G.identity, 1])


def test_det_of_group_element():
    T = irr_table(heisenberg(3))
    for i in range(len(T)):
        if T.is_linear(i):
            for g in range(5):
                assert T.det_of({g: one()}, i) == T.value(i, g)


def test_table_json():
    data = irr_table(build_group("cyclic:3")).to_json()
    assert data["degrees"] == [1, 1, 1]
    assert CycNum.from_json(data["characters"][0][0]) == 1
