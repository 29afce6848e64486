"""Enumeration of weakly ramified local extensions through finite Galois-module algebra.

The first unit filtration quotient U^(1)/U^(2) of the relevant base field E is
modelled as its residue field F_{p^f}, an f-dimensional F_p-space with explicit
action matrices.  The class-field-theoretic arguments then become linear algebra
over F_p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import flint


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _mat(p: int, rows: Sequence[Sequence[int]]) -> flint.nmod_mat:
    return flint.nmod_mat([[int(x) % p for x in row] for row in rows], p)


def _identity(p: int, n: int) -> flint.nmod_mat:
    return _mat(p, [[int(i == j) for j in range(n)] for i in range(n)])


def _rows(M: flint.nmod_mat) -> list:
    return [[int(M[i, j]) for j in range(M.ncols())] for i in range(M.nrows())]


def irreducible_poly(p: int, f: int) -> flint.nmod_poly:
    """The lexicographically first monic irreducible polynomial of degree f over F_p."""
    for tail in itertools.product(range(p), repeat=f):
        poly = flint.nmod_poly(list(reversed(tail)) + [1], p)
        if poly[0] == 0 and f > 1:
            continue
        _, facs = poly.factor()
        if len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree() == f:
            return poly
    raise ValueError("no irreducible polynomial found")


def frobenius_matrix(p: int, f: int) -> flint.nmod_mat:
    """Matrix of x -> x^p on F_{p^f} in the power basis (columns are images)."""
    mod = irreducible_poly(p, f)
    cols = []
    for i in range(f):
        img = flint.nmod_poly([0] * (i * p) + [1], p) % mod if i else flint.nmod_poly([1], p)
        cols.append([int(img[k]) for k in range(f)])
    return _mat(p, [[cols[j][i] for j in range(f)] for i in range(f)])


def element_of_order(p: int, l: int) -> int:
    """An element of F_p^x of exact order l (l | p - 1)."""
    if (p - 1) % l:
        raise ValueError(f"{l} does not divide {p} - 1")
    for g in range(2, p):
        w = pow(g, (p - 1) // l, p)
        if w != 1:
            return w
    raise ValueError("no element of the required order")


@dataclass
class ResidueModule:
    """F_p^f with the action of an abelian group given on generators."""

    p: int
    dim: int
    actions: dict  # generator name -> nmod_mat
    relations: dict = field(default_factory=dict)  # generator name -> order

    def __post_init__(self):
        I = _identity(self.p, self.dim)
        for name, A in self.actions.items():
            if A.nrows() != self.dim or A.ncols() != self.dim:
                raise ValueError("action matrix has the wrong size")
            n = self.relations.get(name)
            if n is not None and _power(A, n) != I:
                raise ValueError(f"generator {name} does not have order dividing {n}")
        names = list(self.actions)
        for a, b in itertools.combinations(names, 2):
            A, B = self.actions[a], self.actions[b]
            if A * B != B * A:
                raise ValueError("action matrices must commute")

    def act(self, word: dict) -> flint.nmod_mat:
        """Matrix of prod g^word[g]."""
        M = _identity(self.p, self.dim)
        for name, e in word.items():
            n = self.relations.get(name)
            if n is None and e < 0:
                raise ValueError("negative powers need the generator order")
            M = M * _power(self.actions[name], e % n if n else e)
        return M


def _power(A: flint.nmod_mat, e: int) -> flint.nmod_mat:
    out = _identity(int(A.modulus()), A.nrows())
    for _ in range(e):
        out = out * A
    return out


def coinvariants(M: ResidueModule, generators: Sequence[dict] | None = None) -> tuple:
    """(dimension of M / I_H M, projection matrix) for H generated by the given words.

    The projection rows span the linear forms vanishing on I_H M.
    """
    p, n = M.p, M.dim
    words = generators if generators is not None else [{k: 1} for k in M.actions]
    I = _identity(p, n)
    cols = []
    for w in words:
        D = M.act(w) - I
        cols.extend([[int(D[i, j]) for i in range(n)] for j in range(n)])
    if not cols:
        return n, I
    # forms y with y (A - 1) = 0: nullspace of the transpose of the image span
    span = _mat(p, cols)  # rows are the vectors (A - 1) e_j
    null, nullity = span.nullspace()
    proj_rows = [[int(null[i, j]) for i in range(n)] for j in range(nullity)]
    if not proj_rows:
        return 0, flint.nmod_mat(0, n, p)
    return nullity, _mat(p, proj_rows)


def coinvariant_generator(M: ResidueModule, generators: Sequence[dict] | None = None) -> int:
    """Index of the first basis vector with nonzero image in the coinvariants."""
    dim, P = coinvariants(M, generators)
    for j in range(M.dim):
        if any(int(P[i, j]) for i in range(P.nrows())):
            return j
    raise ValueError("coinvariants are trivial")


@dataclass(frozen=True)
class ExtClass:
    label: str
    is_ramified: bool
    exponent: int | None
    abelian: bool
    subgroup: tuple = ()
    subfield: str | None = None

    def to_json(self) -> dict:
        return {"label": self.label, "is_ramified": self.is_ramified, "exponent": self.exponent,
                "abelian": self.abelian, "subgroup": list(self.subgroup), "subfield": self.subfield}


def p3_module(p: int) -> ResidueModule:
    """U^(1)/U^(2) of the compositum of the ramified degree-p subfield of Q_p(zeta_{p^2})
    with the unramified degree-p extension: Frobenius acts on F_{p^p}, wild inertia trivially."""
    F = frobenius_matrix(p, p)
    return ResidueModule(p, p, {"frob": F, "wild": _identity(p, p)}, {"frob": p, "wild": p})


def projective_lines(p: int) -> list:
    """Order-p subgroups of (Z/p)^2 as normalized generators."""
    return [(0, 1)] + [(1, b) for b in range(p)]


def enumerate_p3(p: int) -> list:
    """Weakly ramified non-abelian Galois extensions of Q_p of degree p^3."""
    if p == 2 or not _is_prime(p):
        raise ValueError("p must be an odd prime")
    M = p3_module(p)
    dim, _ = coinvariants(M)
    if dim != 1:
        raise AssertionError("coinvariants of U^(1)/U^(2) should be one-dimensional")
    # Q = <pi>/<pi^p> x (U^(1)/U^(2))_Gamma; coordinates (a, b) <-> pi^a u^b
    out = []
    for gen in projective_lines(p):
        line = {((gen[0] * t) % p, (gen[1] * t) % p) for t in range(p)}
        ramified = (0, 1) not in line  # L/E unramified iff the norm group contains u
        if not ramified:
            continue
        # G(L/E) is generated by rec(pi) unless pi lies in the norm group
        exponent = p if (1, 0) in line else p * p
        b = gen[1]
        out.append(ExtClass(label=f"pi*u^{b}", is_ramified=True, exponent=exponent,
                            abelian=False, subgroup=gen))
    return out


def l2p_module(l: int, p: int) -> ResidueModule:
    """U^(1)/U^(2) of E = E_1 E_2 (unramified degree l times Q_p(p^(1/l)))."""
    w = element_of_order(p, l)
    F = frobenius_matrix(p, l)
    D = _mat(p, [[w if i == j else 0 for j in range(l)] for i in range(l)])
    return ResidueModule(p, l, {"delta": D, "phi": F}, {"delta": l, "phi": l})


def order_l_subgroups(l: int) -> list:
    """Generators delta^a phi^b of the order-l subgroups of <delta> x <phi>."""
    return [{"delta": 1}] + [{"phi": 1, "delta": j} for j in range(l)]


def _subgroup_name(word: dict) -> str:
    parts = []
    if word.get("phi"):
        parts.append("phi")
    if word.get("delta"):
        parts.append("delta" if word["delta"] == 1 else f"delta^{word['delta']}")
    return "<" + "*".join(parts) + ">"


def enumerate_l2p(l: int, p: int) -> list:
    """Weakly ramified non-abelian Galois extensions of Q_p of degree l^2 p with
    maximal exponent-l quotient E."""
    if not (_is_prime(l) and _is_prime(p)) or l == 2 or p == 2:
        raise ValueError("l and p must be odd primes")
    if (p - 1) % l:
        raise ValueError(f"{l} does not divide {p} - 1")
    M = l2p_module(l, p)
    out = []
    for H in order_l_subgroups(l):
        if H == {"delta": 1}:
            continue  # Delta must act non-trivially on the quotient
        dim, _ = coinvariants(M, [H])
        if dim != 1:
            raise AssertionError("E^x / X(H) should have order p")
        if not _gamma_stable(M, H):
            raise AssertionError("X(H) should be Gamma-stable")
        name = _subgroup_name(H)
        out.append(ExtClass(label=f"X({name})", is_ramified=True, exponent=None, abelian=False,
                            subgroup=(H.get("delta", 0), H.get("phi", 0)), subfield=f"E^{name}"))
    return out


def _gamma_stable(M: ResidueModule, H: dict) -> bool:
    """I_H M is stable under every generator of Gamma."""
    p, n = M.p, M.dim
    D = M.act(H) - _identity(p, n)
    _, P = coinvariants(M, [H])
    for A in M.actions.values():
        img = P * A * D
        if any(int(img[i, j]) for i in range(img.nrows()) for j in range(img.ncols())):
            return False
    return True


def _quotient_action(M: ResidueModule, H: dict) -> dict:
    """Scalars by which delta and phi act on the one-dimensional M / I_H M."""
    _, P = coinvariants(M, [H])
    j = coinvariant_generator(M, [H])
    base = int(P[0, j])
    out = {}
    for name, A in M.actions.items():
        col = [int(A[i, j]) for i in range(M.dim)]
        val = sum(int(P[0, i]) * col[i] for i in range(M.dim)) % M.p
        out[name] = val * pow(base, -1, M.p) % M.p
    return out


def quotient_module_check(l: int, p: int, H: dict | None = None,
                          module: ResidueModule | None = None) -> bool:
    """Idempotent decomposition of E^x / X(H) over F_p[Gamma]: exactly one nonzero
    component, and its kernel is neither Delta nor Gamma."""
    M = module or l2p_module(l, p)
    H = H or {"phi": 1, "delta": 0}
    dim, _ = coinvariants(M, [H])
    if dim != 1:
        return False
    act = _quotient_action(M, H)
    w = element_of_order(p, l)
    logs = {pow(w, k, p): k for k in range(l)}
    if act["delta"] not in logs or act["phi"] not in logs:
        return False
    a0, b0 = logs[act["delta"]], logs[act["phi"]]
    linv = pow(l * l, -1, p)
    nonzero = []
    for a in range(l):
        for b in range(l):
            # e_chi applied to the generator: (1/l^2) sum chi(g^-1) g
            s = 0
            for i in range(l):
                for k in range(l):
                    chi_inv = pow(w, (-(a * i + b * k)) % l, p)
                    g_val = pow(w, (a0 * i + b0 * k) % l, p)
                    s += chi_inv * g_val
            if s * linv % p:
                nonzero.append((a, b))
    if len(nonzero) != 1:
        return False
    a, b = nonzero[0]
    # kernel of chi: delta^i phi^k with a i + b k = 0 mod l
    kernel = {(i, k) for i in range(l) for k in range(l) if (a * i + b * k) % l == 0}
    delta = {(i, 0) for i in range(l)}
    h_elems = {((H.get("delta", 0) * t) % l, (H.get("phi", 0) * t) % l) for t in range(l)}
    return len(kernel) == l and kernel != delta and kernel == h_elems
