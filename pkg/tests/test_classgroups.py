import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from relkgauss import classgroups as cg
from relkgauss.cyclonum import CycNum, zeta
from relkgauss.gaussjacobi import AbelianField
from relkgauss.groups import abelian, build_group, cyclic, heisenberg, irr_table
from relkgauss.relk import ideal_lattice

BETTI_GROUPS = ["cyclic:3", "cyclic:5", "cyclic:7", "cyclic:9", "abelian:3,3", "heisenberg:3"]


@pytest.mark.parametrize("spec", BETTI_GROUPS)
def test_betti_gram_matches_closed_form(spec):
    for row in cg.betti_report(build_group(spec)):
        assert row["rel_err"] < 1e-9


def test_betti_scales_with_base_degree():
    G = cyclic(3)
    for d in (1, 2):
        assert abs(cg.betti_second_component(G, d, 1) / cg.betti_closed_form(G, d, 1) - 1) < 1e-9
    assert cg.betti_closed_form(G, 2, 0) == pytest.approx(3.0)


def test_isotypic_basis_dimensions():
    T = irr_table(heisenberg(3))
    for i, d in enumerate(T.degrees):
        W = cg.isotypic_basis(T, i)
        assert W.shape == (27, d * d)
        assert np.allclose(W.conj().T @ W, np.eye(d * d), atol=1e-10)


def test_gram_data_validation():
    with pytest.raises(ValueError, match="hermitian"):
        cg.GramData([0, 1], [[1, 2], [0, 1]])
    with pytest.raises(ValueError, match="positive definite"):
        cg.GramData([0, 1], [[1, 0], [0, -1]]).cholesky()
    assert cg.GramData([0, 1], [[2, 1], [1, 2]]).determinant() == pytest.approx(3.0)


@settings(max_examples=40, deadline=None)
@given(arrays(np.float64, (3, 3), elements=st.floats(-2, 2)),
       arrays(np.float64, (3, 3), elements=st.floats(-2, 2)))
def test_pullback_is_functorial(a, b):
    if abs(np.linalg.det(a)) < 1e-3 or abs(np.linalg.det(b)) < 1e-3:
        return
    gram = np.eye(3) + 0.1 * np.ones((3, 3))
    lhs = cg.pullback(a @ b, gram)
    rhs = cg.pullback(b, cg.pullback(a, gram))
    assert np.allclose(lhs, rhs, atol=1e-9)
    ratio = np.linalg.det(cg.pullback(a, gram)) / np.linalg.det(gram)
    assert ratio == pytest.approx(np.linalg.det(a) ** 2)


def test_pullback_scalar_and_singular():
    g = cg.pullback(2 * np.eye(4), np.eye(4))
    assert np.linalg.det(g).real == pytest.approx(256.0)
    assert np.allclose(g, 4 * np.eye(4))
    with pytest.raises(ValueError, match="singular"):
        cg.pullback(np.zeros((2, 2)), np.eye(2))


def test_trace_form_of_integers():
    # the trace form on Z[zeta_7] has discriminant 7^5
    F = AbelianField(7)
    O = ideal_lattice(F, {})
    gram = cg.trace_form_gram(F, O.basis)
    assert abs(np.linalg.det(gram)) == pytest.approx(7 ** 5, rel=1e-9)
    E = cg.embedding_matrix(F, [zeta(7)])
    assert E.shape == (6, 1)


def test_disc_rep_identity_and_scalars():
    T = irr_table(cyclic(3))
    rank = 2
    ident = cg.scalar_basis_change(rank, 1)
    first, pf = cg.disc_rep(T, {5: ident})
    assert pf == {}
    assert all(v == 1 for v in first.at(5).values)
    first, _ = cg.disc_rep(T, {5: cg.scalar_basis_change(rank, 5)})
    assert all(v == 25 for v in first.at(5).values)


def test_disc_rep_values_match_direct_determinant():
    # lambda = [[1 + g, g], [0, 2]] over Q[C3]: Det at chi is (1 + chi(g)) * 2
    G = cyclic(3)
    T = irr_table(G)
    lam = [[{0: 1, 1: 1}, {1: 1}], [{}, {0: 2}]]
    first, _ = cg.disc_rep(T, {2: lam})
    for i in range(3):
        assert first.at(2).values[i] == (1 + T.value(i, 1)) * 2
    # multiplicativity of Det under composition of basis changes
    lam2 = [[{0: 1}, {2: 3}], [{1: 1}, {0: 1}]]
    a = cg.group_ring_matrix_det(T, lam, 1)
    b = cg.group_ring_matrix_det(T, lam2, 1)
    prod = [[{}, {}], [{}, {}]]
    for r in range(2):
        for c in range(2):
            for k in range(2):
                for g, x in lam[r][k].items():
                    for h, y in lam2[k][c].items():
                        gh = G.mult[g][h]
                        prod[r][c][gh] = prod[r][c].get(gh, 0) + x * y
    assert cg.group_ring_matrix_det(T, prod, 1) == a * b


def test_disc_rep_on_non_abelian_group():
    T = irr_table(heisenberg(3))
    first, _ = cg.disc_rep(T, {3: cg.scalar_basis_change(1, 3)})
    assert first.at(3).values == tuple(CycNum.rational(3) ** d for d in T.degrees)


def test_disc_rep_errors(quaternion):
    T = irr_table(cyclic(3))
    with pytest.raises(ValueError, match="singular"):
        cg.disc_rep(T, {2: [[{0: 1, 1: -1}]]})
    with pytest.raises(ValueError, match="hermitian"):
        cg.disc_rep(T, {}, gram=[[{1: 1}]])
    assert cg.check_hermitian(T, [[{1: 1, 2: 1}]])
    with pytest.raises(ValueError, match="Pfaffian unsupported"):
        cg.disc_rep(irr_table(quaternion), {})


def test_permutation_modules():
    G = cyclic(3)
    M = cg.PermutationModule(G, [0, 1, 2], lambda g, p: (g + p) % 3)
    assert M.is_free() and M.rank == 1 and M.transversal() == [0]
    triv = cg.PermutationModule(G, ["a"], lambda g, p: p)
    assert not triv.is_free() and triv.rank is None
    with pytest.raises(ValueError):
        triv.transversal()
    with pytest.raises(ValueError):
        cg.PermutationModule(G, [0, 1], lambda g, p: (g + p) % 3)
    assert cg.betti_module(abelian(3, 3), 2).rank == 2


def test_key_diagram_check():
    assert cg.key_diagram_check(irr_table(build_group("cyclic:5")), samples=30, seed=4)
