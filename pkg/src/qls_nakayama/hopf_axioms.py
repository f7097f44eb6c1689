"""Exhaustive checks of the Hopf algebra axioms and of the elementary lemma
about central group-likes and the integrals t_sigma.

Each function returns the list of failing witnesses; an empty list is a pass.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .cyclotomic import CycScalar
from .frobenius import right_integral
from .hopf_core import HopfAlgebra, HopfElement, Monomial, TensorElement, _acc


def _delta_left(H: HopfAlgebra, t: TensorElement) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (a1, a2), v in H.comultiply_monomial(a).terms.items():
            _acc(out, (a1, a2, b), c * v)
    return out


def _delta_right(H: HopfAlgebra, t: TensorElement) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), v in H.comultiply_monomial(b).terms.items():
            _acc(out, (a, b1, b2), c * v)
    return out


def coassociativity_failures(H: HopfAlgebra, mons: Optional[Sequence[Monomial]] = None) -> list[Monomial]:
    bad = []
    for b in mons if mons is not None else H.basis():
        d = H.comultiply_monomial(b)
        if _delta_left(H, d) != _delta_right(H, d):
            bad.append(b)
    return bad


def generator_coassociativity_failures(H: HopfAlgebra) -> list[str]:
    gens = [(f"x{i+1}", H.x(i)) for i in range(H.n)]
    gens += [(f"g{g}", H.grp(g)) for g in H.group.generators()]
    bad = []
    for name, e in gens:
        d = H.comultiply(e)
        if _delta_left(H, d) != _delta_right(H, d):
            bad.append(name)
    return bad


def counit_failures(H: HopfAlgebra) -> list[Monomial]:
    bad = []
    for b in H.basis():
        left: dict = {}
        right: dict = {}
        for (a1, a2), c in H.comultiply_monomial(b).terms.items():
            if a1.is_grouplike():
                _acc(left, a2, c)
            if a2.is_grouplike():
                _acc(right, a1, c)
        want = {b: H.one_scalar}
        if left != want or right != want:
            bad.append(b)
    return bad


def antipode_failures(H: HopfAlgebra) -> list[Monomial]:
    bad = []
    for b in H.basis():
        d = H.comultiply_monomial(b)
        eps = H.one() if b.is_grouplike() else H.zero()
        left = H.mult_map(H.apply_tensor_map(d, H.antipode, lambda e: e))
        right = H.mult_map(H.apply_tensor_map(d, lambda e: e, H.antipode))
        if left != eps or right != eps:
            bad.append(b)
    return bad


def comultiplicativity_failures(H: HopfAlgebra, pairs: Optional[Sequence[tuple[Monomial, Monomial]]] = None
                                ) -> list[tuple[Monomial, Monomial]]:
    """Pairs (a, b) of basis monomials with Delta(ab) != Delta(a) Delta(b)."""
    basis = H.basis()
    if pairs is None:
        pairs = [(a, b) for a in basis for b in basis]
    bad = []
    for a, b in pairs:
        ab = HopfElement(H, H.mul_monomials(a, b))
        if H.comultiply(ab) != H.comultiply_monomial(a) * H.comultiply_monomial(b):
            bad.append((a, b))
    return bad


def oracle_disagreements(H: HopfAlgebra, max_len: int = 3) -> list[tuple]:
    """Words in x_i and the cyclic generators of G where multiply and the rewriting oracle differ."""
    syms: list = [f"x{i+1}" for i in range(H.n)] + [g for g in H.group.generators() if g.order > 1]
    elems = {s: (H.x(int(s[1:]) - 1) if isinstance(s, str) else H.grp(s)) for s in syms}
    bad = []
    for L in range(1, max_len + 1):
        for word in itertools.product(syms, repeat=L):
            prod = H.one()
            for s in word:
                prod = prod * elems[s]
            if prod != H.free_multiply_oracle(list(word)):
                bad.append(word)
    return bad


# -- the lemma on central elements and t_sigma ------------------------------------------


def _generators(H: HopfAlgebra) -> list[tuple[str, HopfElement]]:
    gens = [(f"x{i+1}", H.x(i)) for i in range(H.n)]
    gens += [(f"g{g}", H.grp(g)) for g in H.group.generators()]
    return gens


def central_pair_failures(H: HopfAlgebra) -> list[tuple[int, int, str]]:
    """(i, j, generator) where lambda_ji g_i g_j fails to commute, for lambda_ji != 0."""
    G = H.group
    bad = []
    for i in range(H.n):
        for j in range(H.n):
            lam = H.lam[j][i]
            if i == j or not lam:
                continue
            c = H.grp(G.compose(H.gs[i], H.gs[j])).scale(lam)
            for name, s in _generators(H):
                if c * s != s * c:
                    bad.append((i, j, name))
    return bad


def central_power_failures(H: HopfAlgebra) -> list[tuple[int, str]]:
    """(i, generator) where lambda_i g_i^{m_i} fails to commute, for lambda_i != 0."""
    bad = []
    for i in range(H.n):
        lam = H.lambda_diag[i]
        if not lam:
            continue
        c = H.grp(H.group.power(H.gs[i], H.m[i])).scale(lam)
        for name, s in _generators(H):
            if c * s != s * c:
                bad.append((i, name))
    return bad


def integral_absorbs_group_failures(H: HopfAlgebra, sigma: Sequence[int]) -> list[tuple[int, ...]]:
    t = right_integral(H, sigma)
    return [g for g in H.group.exponent_tuples() if t * H.grp(g) != t]


def integral_kills_last_x(H: HopfAlgebra, sigma: Sequence[int]) -> bool:
    if not sigma:
        return True
    t = right_integral(H, sigma)
    return (t * H.x(sigma[-1])).is_zero()
