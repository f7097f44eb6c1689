"""Eigenspace gradings of H by a diagonal automorphism and their analysis.

Decides strong gradedness by the L1 = L2 criterion and by a span oracle,
checks equidimensionality of the components and unimodularity through the
counit, and builds the generators y_i of the identity component H_1 when
the grading is strong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .abelian_group import GroupElement
from .cyclotomic import CycScalar, RootOfUnity, detect_root_order, root_of_unity
from .exact_linalg import Echelon
from .frobenius import (
    DEFAULT_ORACLE_DIM,
    DiagonalAutomorphism,
    InconsistencyError,
    ModularElement,
    OracleSkipped,
    s2_automorphism,
)
from .hopf_core import HopfAlgebra, HopfElement, Monomial


class NotStronglyGraded(ValueError):
    pass


@dataclass(frozen=True)
class RootSubgroup:
    """The cyclic subgroup of mu_N of the given order."""

    conductor: int
    order: int
    generators_from: tuple[str, ...] = ()

    @property
    def generator(self) -> RootOfUnity:
        return RootOfUnity(self.conductor, self.conductor // self.order)

    def elements(self) -> list[RootOfUnity]:
        w = self.generator
        return [w ** k for k in range(self.order)]

    def __contains__(self, z: RootOfUnity) -> bool:
        return self.order % z.order == 0


@dataclass
class GradingReport:
    automorphism_name: str
    omega: RootOfUnity
    components: dict[RootOfUnity, list[Monomial]]
    eigenvalues_form_group: bool
    L1: Optional[RootSubgroup] = None
    L2: Optional[RootSubgroup] = None
    strongly_graded_by_theorem: Optional[bool] = None
    strongly_graded_by_bruteforce: Optional[bool] = None
    unimodular: Optional[bool] = None
    equidimensional: Optional[bool] = None
    h1: Optional["H1Presentation"] = None

    def component_of(self) -> dict[Monomial, RootOfUnity]:
        return {m: z for z, mons in self.components.items() for m in mons}

    def dimensions(self) -> dict[RootOfUnity, int]:
        return {z: len(v) for z, v in self.components.items()}

    def omega_power(self, z: RootOfUnity) -> int:
        """i with z = omega^i."""
        w = self.omega
        for i in range(w.order):
            if w ** i == z:
                return i
        raise InconsistencyError(f"{z} is not a power of omega")


def eigen_decompose(H: HopfAlgebra, auto: DiagonalAutomorphism) -> GradingReport:
    comps: dict[RootOfUnity, list[Monomial]] = {}
    for b in H.basis():
        comps.setdefault(auto.eigenvalue_of[b], []).append(b)
    comps = dict(sorted(comps.items()))
    eig = set(comps)
    closed = all(a * b in eig for a in eig for b in eig)
    order = math.lcm(1, *(z.order for z in eig))
    is_group = closed and len(eig) == order
    omega = RootOfUnity(H.N, H.N // order)
    return GradingReport(auto.name, omega, comps, is_group)


# -- L1, L2 and the theorem route ----------------------------------------------------


def compute_L1_L2(H: HopfAlgebra, alpha: ModularElement) -> tuple[RootSubgroup, RootSubgroup]:
    N = H.N
    gens = H.group.generators()
    l2 = math.lcm(1, *(detect_root_order(alpha(H.make_monomial((0,) * H.n, g))) for g in gens))
    qords = [detect_root_order(H.q[i][i]) for i in range(H.n)]
    l1 = math.lcm(l2, *qords)
    L2 = RootSubgroup(N, l2, tuple(f"alpha(gen{j+1})" for j in range(len(gens))))
    L1 = RootSubgroup(N, l1, tuple(f"q_{i+1}{i+1}" for i in range(H.n)) + L2.generators_from)
    return L1, L2


def qii_in_alpha_image(H: HopfAlgebra, alpha: ModularElement) -> list[bool]:
    """Explicit search: is q_ii a value of alpha on G?"""
    image = {alpha.exponent_at(g) for g in H.group.exponent_tuples()}
    return [H.qexp[i][i] in image for i in range(H.n)]


@dataclass
class TheoremVerdict:
    strongly_graded: bool
    group_witness: dict[RootOfUnity, Optional[tuple[int, ...]]]
    counit_vanishing: list[RootOfUnity]

    @property
    def every_component_has_group_element(self) -> bool:
        return all(v is not None for v in self.group_witness.values())


def strongly_graded_theorem(H: HopfAlgebra, alpha: ModularElement,
                            grading: GradingReport) -> TheoremVerdict:
    L1, L2 = compute_L1_L2(H, alpha)
    verdict = L1.order == L2.order
    if verdict != all(qii_in_alpha_image(H, alpha)):
        raise InconsistencyError("L1 = L2 by orders disagrees with explicit power search")
    witness = {}
    vanishing = []
    for z, mons in grading.components.items():
        g = next((m.g for m in mons if m.is_grouplike()), None)
        witness[z] = g
        if g is None:
            vanishing.append(z)
    grading.L1, grading.L2 = L1, L2
    grading.strongly_graded_by_theorem = verdict
    return TheoremVerdict(verdict, witness, vanishing)


# -- brute force -----------------------------------------------------------------------


@dataclass
class BruteForceVerdict:
    unit_criterion: bool
    span_equality: bool
    containment: bool
    missing_unit: list[RootOfUnity] = field(default_factory=list)
    deficient_pairs: list[tuple[RootOfUnity, RootOfUnity]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.unit_criterion == self.span_equality

    @property
    def strongly_graded(self) -> bool:
        return self.unit_criterion and self.span_equality


def strongly_graded_bruteforce(H: HopfAlgebra, grading: GradingReport,
                               max_dim: int = DEFAULT_ORACLE_DIM) -> BruteForceVerdict:
    """Span oracle for H_w H_w' = H_ww' and 1 in H_w H_{w^-1}."""
    if H.dim > max_dim:
        raise OracleSkipped(f"dim {H.dim} exceeds oracle bound {max_dim}")
    comps = grading.components
    local = {z: {m: k for k, m in enumerate(mons)} for z, mons in comps.items()}
    unit = Monomial((0,) * H.n, H.e)
    missing, deficient = [], []
    containment = True
    for z1, mons1 in comps.items():
        for z2, mons2 in comps.items():
            target = z1 * z2
            idx = local.get(target)
            ech = Echelon(len(comps.get(target, ())))
            for a in mons1:
                for b in mons2:
                    prod = H.mul_monomials(a, b)
                    if idx is None or any(m not in idx for m in prod):
                        containment = False
                        continue
                    if not ech.is_full():
                        ech.add({idx[m]: c for m, c in prod.items()})
            if not ech.is_full():
                deficient.append((z1, z2))
            if target.is_one() and not ech.contains({idx[unit]: H.one_scalar}):
                missing.append(z1)
    verdict = BruteForceVerdict(not missing, not deficient, containment, missing, deficient)
    grading.strongly_graded_by_bruteforce = verdict.strongly_graded
    return verdict


# -- equidimensionality ------------------------------------------------------------------


@dataclass
class EquidimReport:
    dimensions: dict[RootOfUnity, int]
    expected: int
    equal: bool
    theta_homomorphism: Optional[bool] = None
    theta_eigenvectors: Optional[bool] = None
    alternative_basis_rank: Optional[int] = None
    fiber_sizes_match: Optional[bool] = None

    @property
    def passed(self) -> bool:
        flags = [self.theta_homomorphism, self.theta_eigenvectors, self.fiber_sizes_match]
        return self.equal and all(f is not False for f in flags)


def _theta_exponent(H: HopfAlgebra, alpha: ModularElement, r, g) -> int:
    return (-sum(H.qexp[i][i] * ri for i, ri in enumerate(r)) - alpha.exponent_at(g)) % H.N


def equidimensionality_check(H: HopfAlgebra, alpha: ModularElement, grading: GradingReport,
                             rho: Optional[DiagonalAutomorphism] = None,
                             max_dim: int = DEFAULT_ORACLE_DIM) -> EquidimReport:
    dims = grading.dimensions()
    L1 = grading.L1.order if grading.L1 else len(dims)
    expected = H.dim // L1
    rep = EquidimReport(dims, expected, len(set(dims.values())) == 1 and expected in dims.values())
    grading.equidimensional = rep.equal
    if rho is None or H.dim > max_dim:
        return rep

    G = H.group
    domain = [(b.r, b.g) for b in H.basis()]
    theta = {(r, g): _theta_exponent(H, alpha, r, g) for r, g in domain}
    hom = True
    for r1, g1 in domain:
        for r2, g2 in domain:
            r3 = tuple((a + b) % mi for a, b, mi in zip(r1, r2, H.m))
            if theta[r3, G.compose(g1, g2)] != (theta[r1, g1] + theta[r2, g2]) % H.N:
                hom = False
                break
        if not hom:
            break
    rep.theta_homomorphism = hom

    u = [H.x(i) * H.grp(G.inverse(H.gs[i])) for i in range(H.n)]
    index = {b: k for k, b in enumerate(H.basis())}
    ech = Echelon(H.dim)
    eig_ok = True
    for r, g in domain:
        elt = H.one()
        for i, ri in enumerate(r):
            for _ in range(ri):
                elt = elt * u[i]
        elt = elt * H.grp(g)
        want = RootOfUnity(H.N, theta[r, g])
        if elt.is_zero() or any(rho.eigenvalue_of[m] != want for m in elt.terms):
            eig_ok = False
        ech.add({index[m]: c for m, c in elt.terms.items()})
    rep.theta_eigenvectors = eig_ok
    rep.alternative_basis_rank = ech.rank

    fibers: dict[int, int] = {}
    for v in theta.values():
        fibers[v] = fibers.get(v, 0) + 1
    image = {RootOfUnity(H.N, k) for k in fibers}
    rep.fiber_sizes_match = (
        ech.rank == H.dim
        and image == set(dims)
        and all(fibers[z.exponent] == dims[z] for z in dims)
    )
    return rep


# -- unimodularity through the grading ---------------------------------------------------


def unimodularity_via_counit(grading: GradingReport) -> bool:
    """True iff eps vanishes on every component other than H_1."""
    return all(
        not any(m.is_grouplike() for m in mons)
        for z, mons in grading.components.items() if not z.is_one()
    )


def alpha_counit_relation_failures(H: HopfAlgebra, alpha: ModularElement,
                                   grading: GradingReport) -> list[Monomial]:
    """Monomials h in H_{w^i} violating alpha(h) = w^{-i} eps(h)."""
    bad = []
    for z, mons in grading.components.items():
        i = grading.omega_power(z)
        w_inv = (grading.omega ** (-i)).value
        for m in mons:
            eps = H.one_scalar if m.is_grouplike() else H.zero_scalar
            if alpha(m) != w_inv * eps:
                bad.append(m)
    return bad


# -- the S^2 grading ---------------------------------------------------------------------


@dataclass
class S2Check:
    s2_is_identity: bool
    grading: GradingReport
    bruteforce: Optional[BruteForceVerdict]

    @property
    def consistent(self) -> bool:
        if self.s2_is_identity:
            return len(self.grading.components) == 1
        return self.bruteforce is not None and not self.bruteforce.strongly_graded


def s2_not_strongly_graded_check(H: HopfAlgebra, max_dim: int = DEFAULT_ORACLE_DIM) -> S2Check:
    s2 = s2_automorphism(H)
    grading = eigen_decompose(H, s2)
    bf = strongly_graded_bruteforce(H, grading, max_dim)
    return S2Check(s2.is_identity(), grading, bf)


# -- H_1 presentation ----------------------------------------------------------------------


@dataclass
class H1Presentation:
    gamma: list[tuple[int, ...]]
    gamma_match_counts: list[int]
    gamma_tilde: list[tuple[int, ...]]
    y: list[HopfElement]
    N_subgroup: list[tuple[int, ...]]
    y_in_h1: bool
    relations_verified: tuple[bool, bool, bool]
    y_basis_monomials: list[Monomial]
    basis_rank: int
    h1_dim: int
    kn_membership: bool
    sign_claim: bool

    @property
    def basis_spans_h1(self) -> bool:
        return self.basis_rank == self.h1_dim == len(self.y_basis_monomials)

    @property
    def passed(self) -> bool:
        return (self.y_in_h1 and all(self.relations_verified) and self.basis_spans_h1
                and self.kn_membership and self.sign_claim)


def compute_h1_presentation(H: HopfAlgebra, alpha: ModularElement,
                            rho: DiagonalAutomorphism) -> H1Presentation:
    G = H.group
    N = H.N
    L1, L2 = compute_L1_L2(H, alpha)
    if L1.order != L2.order:
        raise NotStronglyGraded("H1 presentation requires L1 = L2")
    elems = list(G.exponent_tuples())

    gamma, counts = [], []
    for i in range(H.n):
        hits = [g for g in elems if alpha.exponent_at(g) == H.qexp[i][i]]
        if not hits:
            raise InconsistencyError(f"no gamma_{i+1} with alpha(gamma) = q_{i+1}{i+1}")
        gamma.append(hits[0])
        counts.append(len(hits))
    gt = [G.inverse(G.compose(H.gs[i], gamma[i])) for i in range(H.n)]
    y = [H.x(i) * H.grp(gt[i]) for i in range(H.n)]
    y_in_h1 = all(rho(yi) == yi for yi in y)
    kernel = [g for g in elems if alpha.exponent_at(g) == 0]

    def chi_val(i, g):
        return root_of_unity(N, H.chis[i].exponent_at(g))

    def group_elt(g):
        return H.grp(g)

    comm = all(
        group_elt(g) * y[i] == (y[i] * group_elt(g)).scale(chi_val(i, g))
        for g in kernel for i in range(H.n)
    )
    inv = G.inverse
    skew = True
    for i in range(H.n):
        for j in range(H.n):
            if i == j:
                continue
            coef = H.q[i][j] * chi_val(j, gt[i]) * chi_val(i, gt[j]).inv()
            corr = (group_elt(G.compose(gt[i], gt[j]))
                    - group_elt(G.compose(inv(gamma[i]), inv(gamma[j])))).scale(chi_val(j, gt[i]) * H.lam[i][j])
            if y[i] * y[j] != (y[j] * y[i]).scale(coef) + corr:
                skew = False
    power = True
    sign = True
    for i in range(H.n):
        mi = H.m[i]
        c = chi_val(i, G.power(gt[i], mi * (mi - 1) // 2))
        rhs = (group_elt(G.power(gt[i], mi)) - group_elt(G.power(inv(gamma[i]), mi))).scale(
            H.lambda_diag[i] * c)
        if y[i] ** mi != rhs:
            power = False
        if H.lambda_diag[i] and not (c.is_one() or (-c).is_one()):
            sign = False

    index = {b: k for k, b in enumerate(H.basis())}
    ech = Echelon(H.dim)
    mons = []
    in_h1 = True
    for b in H.basis():
        if any(b.g):
            continue
        base = H.one()
        for i, ri in enumerate(b.r):
            base = base * y[i] ** ri
        for g in kernel:
            elt = base * group_elt(g)
            mons.extend(sorted(elt.terms))
            if rho(elt) != elt:
                in_h1 = False
            ech.add({index[m]: c for m, c in elt.terms.items()})
    ident = RootOfUnity(N, 0)
    h1_dim = sum(1 for b in H.basis() if rho.eigenvalue_of[b] == ident)

    def in_kn(lam: CycScalar, g) -> bool:
        return lam.is_zero() or alpha.exponent_at(g) == 0

    member = True
    for i in range(H.n):
        for j in range(i + 1, H.n):
            lam = H.lam[i][j]
            member &= in_kn(lam, G.compose(gt[i], gt[j]))
            member &= in_kn(lam, G.compose(gamma[i], gamma[j]))
        lam = H.lambda_diag[i]
        member &= in_kn(lam, G.power(gt[i], H.m[i]))
        member &= in_kn(lam, G.power(gamma[i], H.m[i]))

    return H1Presentation(
        gamma=gamma,
        gamma_match_counts=counts,
        gamma_tilde=gt,
        y=y,
        N_subgroup=kernel,
        y_in_h1=y_in_h1 and in_h1,
        relations_verified=(comm, skew, power),
        y_basis_monomials=mons,
        basis_rank=ech.rank,
        h1_dim=h1_dim,
        kn_membership=bool(member),
        sign_claim=sign,
    )
