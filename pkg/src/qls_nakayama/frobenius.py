"""Integrals, modular element, Frobenius form and Nakayama automorphism.

Each quantity has a closed form and an independent route through the
algebra engine (products, coproduct, antipode, linear solves); the two are
compared by the analysis pipeline.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .abelian_group import Character
from .cyclotomic import CycScalar, RootOfUnity, root_exponent, root_of_unity
from .exact_linalg import Matrix, nullspace, rank
from .hopf_core import HopfAlgebra, HopfElement, Monomial


class InconsistencyError(RuntimeError):
    """Two routes that must agree did not; points at an engine bug."""


class OracleSkipped(RuntimeError):
    pass


DEFAULT_ORACLE_DIM = 128


# -- functionals and diagonal maps --------------------------------------------------


@dataclass
class LinearFunctional:
    algebra: HopfAlgebra
    values: dict[Monomial, CycScalar]

    def on_monomial(self, mon: Monomial) -> CycScalar:
        return self.values.get(mon, self.algebra.zero_scalar)

    def __call__(self, a: HopfElement | Monomial) -> CycScalar:
        if isinstance(a, Monomial):
            return self.on_monomial(a)
        total = self.algebra.zero_scalar
        for mon, c in a.terms.items():
            v = self.values.get(mon)
            if v:
                total = total + c * v
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return {k: v for k, v in self.values.items() if v} == {k: v for k, v in other.values.items() if v}


def counit_functional(H: HopfAlgebra) -> LinearFunctional:
    return LinearFunctional(H, {b: H.one_scalar for b in H.basis() if b.is_grouplike()})


def convolve(f: LinearFunctional, g: LinearFunctional) -> LinearFunctional:
    """(f * g)(h) = f(h_(1)) g(h_(2))."""
    H = f.algebra
    vals = {}
    for b in H.basis():
        acc = H.zero_scalar
        for (a, c), v in H.comultiply_monomial(b).terms.items():
            fa = f.on_monomial(a)
            if fa:
                gc = g.on_monomial(c)
                if gc:
                    acc = acc + v * fa * gc
        if acc:
            vals[b] = acc
    return LinearFunctional(H, vals)


@dataclass(frozen=True)
class ModularElement:
    """alpha: zero on every x-monomial, a character on G."""

    on_group: Character

    annihilates_x = True

    def exponent_at(self, g) -> int:
        return self.on_group.exponent_at(g)

    def root(self, g) -> RootOfUnity:
        return RootOfUnity(self.on_group.group.exponent, self.exponent_at(g))

    def __call__(self, mon: Monomial) -> CycScalar:
        N = self.on_group.group.exponent
        if any(mon.r):
            return CycScalar.zero(N)
        return root_of_unity(N, self.exponent_at(mon.g))

    def evaluate(self, a: HopfElement) -> CycScalar:
        total = a.algebra.zero_scalar
        for mon, c in a.terms.items():
            if not any(mon.r):
                total = total + c * self(mon)
        return total

    def as_functional(self, H: HopfAlgebra) -> LinearFunctional:
        return LinearFunctional(H, {b: self(b) for b in H.basis() if b.is_grouplike()})

    def is_trivial(self) -> bool:
        return self.on_group.is_trivial()

    @property
    def order(self) -> int:
        return self.on_group.image_order


@dataclass
class DiagonalAutomorphism:
    algebra: HopfAlgebra
    eigenvalue_of: dict[Monomial, RootOfUnity]
    name: str = ""

    def apply(self, a: HopfElement) -> HopfElement:
        return HopfElement(a.algebra, {m: c * self.eigenvalue_of[m].value for m, c in a.terms.items()})

    def __call__(self, a: HopfElement) -> HopfElement:
        return self.apply(a)

    def power(self, l: int) -> DiagonalAutomorphism:
        return DiagonalAutomorphism(
            self.algebra, {m: e ** l for m, e in self.eigenvalue_of.items()}, f"{self.name}^{l}"
        )

    def is_identity(self) -> bool:
        return all(e.is_one() for e in self.eigenvalue_of.values())

    def eigenvalues(self) -> set[RootOfUnity]:
        return set(self.eigenvalue_of.values())

    def order(self) -> int:
        return math.lcm(1, *(e.order for e in self.eigenvalue_of.values()))


# -- integrals ---------------------------------------------------------------------


def right_integral(H: HopfAlgebra, sigma: Optional[Sequence[int]] = None) -> HopfElement:
    """t_sigma = x_{s1}^{m_{s1}-1} ... x_{sn}^{m_{sn}-1} * sum of G, via multiply."""
    if sigma is None:
        sigma = tuple(range(H.n))
    if sorted(sigma) != list(range(H.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{H.n - 1}")
    t = H.one()
    for i in sigma:
        for _ in range(H.m[i] - 1):
            t = t * H.x(i)
    return t * H.group_sum()


def right_integral_failures(H: HopfAlgebra, t: HopfElement) -> list[Monomial]:
    """Basis elements h with t h != eps(h) t."""
    bad = []
    for b in H.basis():
        hb = H.from_monomial(b)
        if t * hb != t.scale(H.counit(hb)):
            bad.append(b)
    return bad


def all_permutations(n: int, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    perms = list(itertools.permutations(range(n)))
    if limit is not None and len(perms) > limit:
        # identity, reversal and a deterministic stride through the rest
        step = len(perms) // limit
        perms = sorted({perms[0], perms[-1], *perms[::step]})[:limit]
    return perms


# -- modular element -------------------------------------------------------------


def modular_element_closed_form(H: HopfAlgebra) -> ModularElement:
    """alpha|G = chi_1^{m_1-1} ... chi_n^{m_n-1}."""
    chi = H.group.trivial_character()
    for ci, mi in zip(H.chis, H.m):
        chi = chi * ci ** (mi - 1)
    return ModularElement(chi)


def _ratio(a: HopfElement, t: HopfElement) -> CycScalar:
    """c with a == c t, raising if a is not a multiple of t."""
    if a.is_zero():
        return t.algebra.zero_scalar
    mon = min(t.terms)
    c = a.coefficient(mon) / t.terms[mon]
    if a != t.scale(c):
        raise InconsistencyError("left multiple of the integral is not proportional to it")
    return c


def modular_element_derived(H: HopfAlgebra, t: Optional[HopfElement] = None) -> ModularElement:
    """Solve a t = alpha(a) t on the generators of G and on each x_i."""
    if t is None:
        t = right_integral(H)
    G = H.group
    N = H.N
    for i in range(H.n):
        if not _ratio(H.x(i) * t, t).is_zero():
            raise InconsistencyError(f"x{i+1} t is a nonzero multiple of t")
    weights = []
    for gen, d in zip(G.generators(), G.cyclic_orders):
        c = _ratio(H.grp(gen) * t, t)
        k = root_exponent(c)
        if k is None or (k * d) % N:
            raise InconsistencyError(f"a t = c t with c = {c} not a value of a character")
        weights.append(k // (N // d))
    return ModularElement(G.character(tuple(weights)))


def is_unimodular(H: HopfAlgebra) -> bool:
    return modular_element_closed_form(H).is_trivial()


# -- Frobenius form ----------------------------------------------------------------


def dual_right_integral(H: HopfAlgebra, max_dim: int = DEFAULT_ORACLE_DIM,
                        t: Optional[HopfElement] = None) -> LinearFunctional:
    """The functional phi with phi(h_(1)) h_(2) = phi(h) 1, normalised to phi(t) = 1."""
    if H.dim > max_dim:
        raise OracleSkipped(f"dim {H.dim} exceeds oracle bound {max_dim}")
    basis = H.basis()
    index = {b: k for k, b in enumerate(basis)}
    unit = Monomial((0,) * H.n, H.e)
    rows: dict[tuple[Monomial, Monomial], dict[int, CycScalar]] = {}
    for b in basis:
        for (a, c), v in H.comultiply_monomial(b).terms.items():
            row = rows.setdefault((b, c), {})
            k = index[a]
            row[k] = row[k] + v if k in row else v
        row = rows.setdefault((b, unit), {})
        k = index[b]
        row[k] = row[k] - H.one_scalar if k in row else -H.one_scalar
    zero = H.zero_scalar
    dense = []
    for key in sorted(rows):
        row = rows[key]
        if any(row.values()):
            line = [zero] * len(basis)
            for k, v in row.items():
                line[k] = v
            dense.append(line)
    ns = nullspace(Matrix(dense, H.N, len(basis)))
    if len(ns) != 1:
        raise InconsistencyError(f"space of right integrals in H* has dimension {len(ns)}")
    phi = LinearFunctional(H, {b: v for b, v in zip(basis, ns[0]) if v})
    if t is None:
        t = right_integral(H)
    s = phi(t)
    if s.is_zero():
        raise InconsistencyError("phi(t) = 0")
    inv = s.inv()
    return LinearFunctional(H, {b: v * inv for b, v in phi.values.items()})


@dataclass
class FrobeniusReport:
    pairing_rank: int
    dim: int
    nakayama_failures: list[tuple[Monomial, Monomial]] = field(default_factory=list)

    @property
    def nondegenerate(self) -> bool:
        return self.pairing_rank == self.dim

    @property
    def passed(self) -> bool:
        return self.nondegenerate and not self.nakayama_failures


def frobenius_property_check(H: HopfAlgebra, phi: LinearFunctional,
                             rho: DiagonalAutomorphism) -> FrobeniusReport:
    """Rank of [phi(b_i b_j)] and phi(y x) = phi(rho(x) y) on all basis pairs."""
    basis = H.basis()
    pairing = {}
    for a in basis:
        for b in basis:
            prod = H.mul_monomials(a, b)
            acc = H.zero_scalar
            for mon, c in prod.items():
                v = phi.values.get(mon)
                if v:
                    acc = acc + c * v
            pairing[a, b] = acc
    mat = Matrix([[pairing[a, b] for b in basis] for a in basis], H.N, len(basis))
    failures = []
    for x in basis:
        ex = rho.eigenvalue_of[x].value
        for y in basis:
            if pairing[y, x] != ex * pairing[x, y]:
                failures.append((x, y))
    return FrobeniusReport(rank(mat), len(basis), failures)


# -- Nakayama automorphism -------------------------------------------------------


def nakayama_exponent(H: HopfAlgebra, mon: Monomial, alpha: ModularElement) -> int:
    """k with rho(x^r g) = zeta_N^k x^r g, from the product formula over i < j."""
    k = 0
    r, m, q = mon.r, H.m, H.qexp
    for i in range(H.n):
        for j in range(i + 1, H.n):
            k += q[i][j] * ((1 - m[j]) * r[i] - (1 - m[i]) * r[j])
    k -= alpha.exponent_at(mon.g)
    return k % H.N


def nakayama(H: HopfAlgebra, power: int = 1, alpha: Optional[ModularElement] = None) -> DiagonalAutomorphism:
    if alpha is None:
        alpha = modular_element_closed_form(H)
    eig = {b: RootOfUnity(H.N, nakayama_exponent(H, b, alpha) * power) for b in H.basis()}
    return DiagonalAutomorphism(H, eig, "rho" if power == 1 else f"rho^{power}")


def s2_automorphism(H: HopfAlgebra) -> DiagonalAutomorphism:
    """S^2(x^r g) = q_11^{-r_1} ... q_nn^{-r_n} x^r g."""
    eig = {}
    for b in H.basis():
        k = -sum(H.qexp[i][i] * ri for i, ri in enumerate(b.r))
        eig[b] = RootOfUnity(H.N, k)
    return DiagonalAutomorphism(H, eig, "S^2")


def convolution_power(f: LinearFunctional, l: int) -> LinearFunctional:
    out = counit_functional(f.algebra)
    for _ in range(l):
        out = convolve(out, f)
    return out


def nakayama_sweedler(H: HopfAlgebra, h: HopfElement, power: int = 1,
                      alpha: Optional[ModularElement] = None,
                      alpha_power: Optional[LinearFunctional] = None) -> HopfElement:
    """rho^l(h) = alpha^{*l}(S(h_(1))) S^{2l}(h_(2))."""
    if alpha_power is None:
        if alpha is None:
            alpha = modular_element_closed_form(H)
        alpha_power = convolution_power(alpha.as_functional(H), power)
    out = H.zero()
    for (a, b), c in H.comultiply(h).terms.items():
        v = alpha_power(H.antipode(H.from_monomial(a)))
        if v:
            out = out + H.antipode(H.from_monomial(b), 2 * power).scale(c * v)
    return out


def nakayama_inverse_sweedler(H: HopfAlgebra, h: HopfElement, alpha: ModularElement) -> HopfElement:
    """rho^{-1}(h) = alpha(h_(1)) S^{-2}(h_(2)) with S^{-2} = S^{2 ord(S^2) - 2}."""
    k = 2 * H.s2_order() - 2
    out = H.zero()
    for (a, b), c in H.comultiply(h).terms.items():
        v = alpha(a)
        if v:
            out = out + H.antipode(H.from_monomial(b), k).scale(c * v)
    return out


def nakayama_order(H: HopfAlgebra) -> int:
    """lcm(m_1, ..., m_n, order of alpha|G)."""
    return math.lcm(1, *H.m, modular_element_closed_form(H).order)


@dataclass
class OrderReport:
    formula: int
    by_iteration: int
    convolution_order_alpha: int
    s2_order: int
    s2_order_by_iteration: int

    @property
    def consistent(self) -> bool:
        return (self.formula == self.by_iteration
                == math.lcm(self.convolution_order_alpha, self.s2_order)
                and self.s2_order == self.s2_order_by_iteration)


def nakayama_order_report(H: HopfAlgebra, iterate_antipode: bool = True) -> OrderReport:
    alpha = modular_element_closed_form(H)
    rho = nakayama(H, 1, alpha)
    by_iter = next(l for l in range(1, H.N + 1) if rho.power(l).is_identity())

    eps = counit_functional(H)
    a = alpha.as_functional(H)
    cur = a
    conv = 1
    while cur != eps:
        cur = convolve(cur, a)
        conv += 1
        if conv > H.N:
            raise InconsistencyError("alpha has no finite convolution order within N")

    s2_iter = H.s2_order()
    if iterate_antipode:
        basis = [H.from_monomial(b) for b in H.basis()]
        cur_b = basis
        s2_iter = 0
        while True:
            cur_b = [H.antipode(v, 2) for v in cur_b]
            s2_iter += 1
            if cur_b == basis:
                break
            if s2_iter > H.N:
                raise InconsistencyError("S^2 has no finite order within N")
    return OrderReport(nakayama_order(H), by_iter, conv, H.s2_order(), s2_iter)
