"""Gram-matrix recipes for metrised and hermitian classes.

Metrics are handled in double precision; determinants of basis changes over
the group ring stay exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .cyclonum import CycNum, det as cyc_det
from .gaussjacobi import AbelianField
from .groups import FiniteGroup, IrrTable, irr_table
from .relk import CharFn, IdeleCharFn, RelKRep, key_diagram_holds, random_rep


@dataclass
class PermutationModule:
    """Z-span of a finite G-set; g acts on the point labels via `action`."""

    group: FiniteGroup
    points: list
    action: Callable[[int, Hashable], Hashable]

    def __post_init__(self):
        self._pos = {p: i for i, p in enumerate(self.points)}
        G = self.group
        for g in range(G.size):
            img = {self.action(g, p) for p in self.points}
            if img != set(self.points):
                raise ValueError("action does not permute the points")
        for g in range(G.size):
            for h in range(G.size):
                for p in self.points:
                    if self.action(G.mult[g][h], p) != self.action(g, self.action(h, p)):
                        raise ValueError("action is not a group action")

    def matrix(self, g: int) -> np.ndarray:
        n = len(self.points)
        M = np.zeros((n, n))
        for j, p in enumerate(self.points):
            M[self._pos[self.action(g, p)], j] = 1.0
        return M

    def orbits(self) -> list:
        seen, out = set(), []
        for p in self.points:
            if p in seen:
                continue
            orb = {self.action(g, p) for g in range(self.group.size)}
            seen |= orb
            out.append(p)
        return out

    def is_free(self) -> bool:
        G = self.group
        return all(len({self.action(g, p) for g in range(G.size)}) == G.size for p in self.points)

    def transversal(self) -> list:
        if not self.is_free():
            raise ValueError("module is not free over the group ring")
        return self.orbits()

    @property
    def rank(self) -> int:
        return len(self.points) // self.group.size if self.is_free() else None


def betti_module(G: FiniteGroup, d: int) -> PermutationModule:
    """Z[Sigma(L)] for a base field of degree d: points (sigma, g) with g' (s, g) = (s, g' g)."""
    pts = [(s, g) for s in range(d) for g in range(G.size)]
    return PermutationModule(G, pts, lambda h, p: (p[0], G.mult[h][p[1]]))


@dataclass
class GramData:
    labels: list
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)
        if not np.allclose(self.matrix, self.matrix.conj().T, atol=1e-9):
            raise ValueError("Gram matrix is not hermitian")

    def cholesky(self) -> np.ndarray:
        try:
            return np.linalg.cholesky(self.matrix)
        except np.linalg.LinAlgError:
            raise ValueError("form is not positive definite") from None

    def determinant(self) -> float:
        L = self.cholesky()
        return float(np.prod(np.abs(np.diag(L))) ** 2)


def _character_matrix(table: IrrTable, i: int) -> np.ndarray:
    G = table.group
    return np.array([table.value(i, g).complex_value() for g in range(G.size)])


def regular_matrices(G: FiniteGroup) -> list:
    """Left-regular action on C[G] with the group elements as orthonormal basis."""
    out = []
    for g in range(G.size):
        M = np.zeros((G.size, G.size))
        for h in range(G.size):
            M[G.mult[g][h], h] = 1.0
        out.append(M)
    return out


def isotypic_basis(table: IrrTable, i: int) -> np.ndarray:
    """Orthonormal basis (columns) of e_phi C[G] for the standard form."""
    G = table.group
    chi = _character_matrix(table, i)
    deg = table.degrees[i]
    reg = regular_matrices(G)
    P = sum(chi[G.inv[g]] * reg[g] for g in range(G.size)) * (deg / G.size)
    u, s, _ = np.linalg.svd(P)
    r = int(np.sum(s > 0.5))
    if r != deg * deg:
        raise ValueError("isotypic component has the wrong dimension")
    return u[:, :r]


def betti_gram(G: FiniteGroup, d: int, i: int) -> GramData:
    """Gram matrix of r(w_s)(1 (x) w_k) under mu_L (x) mu_C[G]."""
    T = irr_table(G)
    X = betti_module(G, d)
    W = isotypic_basis(T, i)
    reg = regular_matrices(G)
    xmats = [X.matrix(g) for g in range(G.size)]
    basis = X.transversal()
    vecs, labels = [], []
    for s in basis:
        e = np.zeros(len(X.points))
        e[X._pos[s]] = 1.0
        for k in range(W.shape[1]):
            v = sum(np.kron(xmats[g] @ e, reg[g] @ W[:, k]) for g in range(G.size))
            vecs.append(v)
            labels.append((s, k))
    V = np.array(vecs)
    return GramData(labels, V.conj() @ V.T)


def betti_second_component(G: FiniteGroup, d: int, i: int) -> float:
    gram = betti_gram(G, d, i)
    deg = irr_table(G).degrees[i]
    return gram.determinant() ** (1.0 / (2 * deg))


def betti_closed_form(G: FiniteGroup, d: int, i: int) -> float:
    return float(G.size) ** (d * irr_table(G).degrees[i] / 2)


def betti_report(G: FiniteGroup, d: int = 1) -> list:
    out = []
    for i in range(len(irr_table(G))):
        c = betti_second_component(G, d, i)
        f = betti_closed_form(G, d, i)
        out.append({"phi": i, "computed": c, "closed_form": f, "rel_err": abs(c - f) / f})
    return out


# -- hermitian discriminants -----------------------------------------------------------

def group_ring_matrix_det(table: IrrTable, matrix: Sequence[Sequence[Mapping]], i: int) -> CycNum:
    """Det(lambda)(chi_i) for a square matrix over Q[G] (entries {g: coefficient})."""
    rep = table.reps[i]
    n = len(matrix)
    deg = table.degrees[i]
    big = [[0] * (n * deg) for _ in range(n * deg)]
    for r in range(n):
        for c in range(n):
            block = None
            for g, coef in matrix[r][c].items():
                M = rep.matrix(g)
                if block is None:
                    block = [[x * coef for x in row] for row in M]
                else:
                    block = [[b + x * coef for b, x in zip(brow, row)] for brow, row in zip(block, M)]
            if block is None:
                continue
            for a in range(deg):
                for b in range(deg):
                    big[r * deg + a][c * deg + b] = block[a][b]
    return cyc_det(big)


def _check_no_symplectic(table: IrrTable):
    if table.symplectic():
        raise ValueError("Pfaffian unsupported: the group has symplectic characters")


def check_hermitian(table: IrrTable, gram: Sequence[Sequence[Mapping]]) -> bool:
    """h(x_i, x_j) = h(x_j, x_i)^# with # inverting group elements."""
    G = table.group
    n = len(gram)
    for r in range(n):
        for c in range(n):
            a = {g: v for g, v in gram[r][c].items() if v}
            b = {G.inv[g]: v for g, v in gram[c][r].items() if v}
            if a != b:
                return False
    return True


def disc_rep(table: IrrTable, local_bases: Mapping[int, Sequence], gram=None):
    """(prod_p Det(lambda_p), empty Pfaffian function) for odd-order groups."""
    _check_no_symplectic(table)
    if gram is not None and not check_hermitian(table, gram):
        raise ValueError("form is not hermitian")
    local = {}
    for p, lam in sorted(local_bases.items()):
        vals = [group_ring_matrix_det(table, lam, i) for i in range(len(table))]
        if any(not v for v in vals):
            raise ValueError(f"local basis change at {p} is singular")
        local[p] = CharFn(table, tuple(vals))
    return IdeleCharFn(table, local), {}


def scalar_basis_change(rank: int, c, identity: int = 0) -> list:
    return [[{identity: c} if r == s else {} for s in range(rank)] for r in range(rank)]


def pullback(xi: np.ndarray, gram: np.ndarray) -> np.ndarray:
    """Gram matrix of h(xi x, xi y) when columns of xi are the images of the basis."""
    xi = np.asarray(xi, dtype=complex)
    if abs(np.linalg.det(xi)) < 1e-12:
        raise ValueError("basis change is singular")
    return xi.T @ np.asarray(gram, dtype=complex) @ xi.conj()


def embedding_matrix(F: AbelianField, basis: Sequence[CycNum]) -> np.ndarray:
    """Columns: the vectors (sigma(b))_sigma for b in the basis."""
    return np.array([[F.act(g, b).complex_value() for b in basis] for g in range(F.degree)])


def trace_form_gram(F: AbelianField, basis: Sequence[CycNum]) -> np.ndarray:
    """sum_sigma sigma(x) conj(sigma(y)) on a Q-basis of L."""
    E = embedding_matrix(F, basis)
    return E.T @ E.conj()


def key_diagram_check(table: IrrTable, samples: int = 100, seed: int = 0,
                      extra: Sequence[RelKRep] = ()) -> bool:
    import random
    rng = random.Random(seed)
    reps = [random_rep(table, rng) for _ in range(samples)] + list(extra)
    return all(key_diagram_holds(r) for r in reps)
