"""The full analysis pipeline for one instance and its report.

Every check lands in a ledger with a status (pass / fail / skipped) and a
provenance tag: "closed-form" for formulas evaluated on the datum, "oracle"
for independent linear-algebra or rewriting computations, "cross-check" for
comparisons between the two.  Verdicts keep every route that produced them.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .config import InstanceConfig, print_config
from .cyclotomic import format_scalar
from .frobenius import (
    InconsistencyError,
    OracleSkipped,
    all_permutations,
    convolution_power,
    dual_right_integral,
    frobenius_property_check,
    modular_element_closed_form,
    modular_element_derived,
    nakayama,
    nakayama_inverse_sweedler,
    nakayama_order,
    nakayama_order_report,
    nakayama_sweedler,
    right_integral,
    right_integral_failures,
    s2_automorphism,
)
from .grading import (
    GradingReport,
    NotStronglyGraded,
    alpha_counit_relation_failures,
    compute_h1_presentation,
    eigen_decompose,
    equidimensionality_check,
    strongly_graded_bruteforce,
    strongly_graded_theorem,
    unimodularity_via_counit,
)
from .hopf_axioms import (
    antipode_failures,
    central_pair_failures,
    central_power_failures,
    coassociativity_failures,
    comultiplicativity_failures,
    counit_failures,
    integral_absorbs_group_failures,
    integral_kills_last_x,
    oracle_disagreements,
)
from .hopf_core import HopfAlgebra, validation_issues

SCHEMA_VERSION = 1
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
SIGMA_SAMPLE = 4
MAX_WITNESSES = 5


@dataclass
class Check:
    name: str
    status: str
    provenance: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "provenance": self.provenance,
                "detail": self.detail}


@dataclass
class Verdict:
    name: str
    value: Any
    provenance: str
    routes: dict[str, Any] = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return all(v == self.value for v in self.routes.values())

    def to_dict(self) -> dict:
        return {"value": self.value, "provenance": self.provenance, "routes": dict(self.routes),
                "agreement": self.agreement}


@dataclass
class AnalysisReport:
    name: str
    config_text: str
    oracle_level: int
    max_dim: int
    valid: bool
    issues: list[str] = field(default_factory=list)
    dim: Optional[int] = None
    conductor: Optional[int] = None
    m: list[int] = field(default_factory=list)
    q: list[list[str]] = field(default_factory=list)
    alpha_table: dict[str, str] = field(default_factory=dict)
    orders: dict[str, int] = field(default_factory=dict)
    rho_grading: Optional[dict] = None
    s2_grading: Optional[dict] = None
    h1: Optional[dict] = None
    checks: list[Check] = field(default_factory=list)
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def disagreements(self) -> list[str]:
        bad = [c.name for c in self.checks if c.status == FAIL]
        bad += [f"verdict:{v.name}" for v in self.verdicts.values() if not v.agreement]
        return bad

    @property
    def exit_code(self) -> int:
        if not self.valid:
            return 1
        return 2 if self.disagreements() else 0

    def check(self, name: str) -> Optional[Check]:
        return next((c for c in self.checks if c.name == name), None)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "instance": self.name,
            "config": self.config_text,
            "oracle_level": self.oracle_level,
            "max_dim": self.max_dim,
            "validation": {"valid": self.valid, "issues": list(self.issues)},
            "dim": self.dim,
            "conductor": self.conductor,
            "m": list(self.m),
            "q": self.q,
            "alpha": self.alpha_table,
            "orders": dict(self.orders),
            "rho_grading": self.rho_grading,
            "s2_grading": self.s2_grading,
            "h1": self.h1,
            "checks": [c.to_dict() for c in self.checks],
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "summary": {**self.counts(), "disagreements": self.disagreements(),
                        "exit_code": self.exit_code},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"instance {self.name}  (oracle level {self.oracle_level}, max_dim {self.max_dim})"]
        if not self.valid:
            lines.append("  INVALID DATUM")
            lines += [f"    - {i}" for i in self.issues]
            return "\n".join(lines) + "\n"
        lines.append(f"  dim H = {self.dim}   m = {self.m}   (z = zeta_{self.conductor})")
        lines.append("  q = " + "; ".join(", ".join(row) for row in self.q))
        lines.append("  alpha on generators: " + ", ".join(f"{k} -> {v}" for k, v in self.alpha_table.items()))
        lines.append("  orders: " + ", ".join(f"{k} = {v}" for k, v in self.orders.items()))
        for title, gr in (("rho", self.rho_grading), ("S^2", self.s2_grading)):
            if gr is None:
                continue
            lines.append(f"  {title}-grading: omega = {gr['omega']}, components:")
            for comp in gr["components"]:
                lines.append(f"    {comp['eigenvalue']:>10}  dim {comp['dim']:>4}  group element: "
                             f"{comp['group_element'] or '-'}")
            if "L1" in gr:
                lines.append(f"    |L1| = {gr['L1']}, |L2| = {gr['L2']}")
        lines.append("  verdicts:")
        for v in self.verdicts.values():
            routes = ", ".join(f"{k}={_fmt(x)}" for k, x in v.routes.items())
            tag = "agree" if v.agreement else "DISAGREE"
            lines.append(f"    {v.name:<22} {_fmt(v.value):<6} [{v.provenance}] {routes}  ({tag})")
        if self.h1 is not None:
            h = self.h1
            lines.append(f"  H_1: gamma = {h['gamma']}, gamma~ = {h['gamma_tilde']}, |N| = {len(h['N'])}, "
                         f"rank {h['basis_rank']}/{h['h1_dim']}, relations {h['relations_verified']}")
        lines.append("  checks:")
        for c in self.checks:
            detail = f"  {c.detail}" if c.detail else ""
            lines.append(f"    [{c.status:<7}] {c.name} ({c.provenance}){detail}")
        cnt = self.counts()
        lines.append(f"  summary: {cnt[PASS]} pass, {cnt[FAIL]} fail, {cnt[SKIPPED]} skipped; "
                     f"exit code {self.exit_code}")
        return "\n".join(lines) + "\n"


def _fmt(x: Any) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _witness(items) -> str:
    items = list(items)
    shown = ", ".join(str(x) for x in items[:MAX_WITNESSES])
    more = f" (+{len(items) - MAX_WITNESSES} more)" if len(items) > MAX_WITNESSES else ""
    return f"{len(items)} failures: {shown}{more}" if items else ""


class _Ledger:
    def __init__(self, report: AnalysisReport):
        self.report = report

    def add(self, name: str, ok: bool, provenance: str, detail: str = "") -> bool:
        self.report.checks.append(Check(name, PASS if ok else FAIL, provenance, detail))
        return ok

    def failures(self, name: str, bad, provenance: str) -> bool:
        bad = list(bad)
        return self.add(name, not bad, provenance, _witness(bad))

    def skip(self, name: str, provenance: str, reason: str) -> None:
        self.report.checks.append(Check(name, SKIPPED, provenance, reason))

    def guarded(self, name: str, provenance: str, fn: Callable[[], Any]) -> Any:
        """Run fn; an OracleSkipped becomes a skipped entry, an InconsistencyError a failure."""
        try:
            return fn()
        except OracleSkipped as e:
            self.skip(name, provenance, str(e))
        except InconsistencyError as e:
            self.add(name, False, provenance, str(e))
        return None


def sigmas_for(n: int, seed: int = 0) -> list[tuple[int, ...]]:
    """All orderings for n <= 3, otherwise identity, reverse and a fixed random sample."""
    if n <= 3:
        return all_permutations(n)
    rng = random.Random(seed)
    out = [tuple(range(n)), tuple(reversed(range(n)))]
    while len(out) < 2 + SIGMA_SAMPLE:
        p = list(range(n))
        rng.shuffle(p)
        if tuple(p) not in out:
            out.append(tuple(p))
    return out


def _grading_dict(H: HopfAlgebra, gr: GradingReport, with_monomials: bool) -> dict:
    comps = []
    for z, mons in gr.components.items():
        g = next((m.g for m in mons if m.is_grouplike()), None)
        comp = {"eigenvalue": str(z), "omega_power": gr.omega_power(z) if gr.eigenvalues_form_group else None,
                "dim": len(mons), "group_element": H.monomial_name(H.make_monomial((0,) * H.n, g)) if g else None}
        if with_monomials:
            comp["monomials"] = [H.monomial_name(m) for m in mons]
        comps.append(comp)
    out = {"automorphism": gr.automorphism_name, "omega": str(gr.omega),
           "eigenvalues_form_group": gr.eigenvalues_form_group, "components": comps}
    if gr.L1 is not None:
        out["L1"] = gr.L1.order
        out["L2"] = gr.L2.order
    return out


def analyze(cfg: InstanceConfig, oracle_level: Optional[int] = None, max_dim: Optional[int] = None,
            s2_grading: bool = False, list_monomials: bool = False) -> AnalysisReport:
    level = cfg.oracle_level if oracle_level is None else oracle_level
    bound = cfg.max_dim if max_dim is None else max_dim
    report = AnalysisReport(cfg.name, print_config(cfg), level, bound, valid=True)
    datum = cfg.to_datum()
    issues = validation_issues(datum)
    if issues:
        report.valid = False
        report.issues = [str(i) for i in issues]
        return report

    H = HopfAlgebra(datum)
    led = _Ledger(report)
    report.dim = H.dim
    report.conductor = H.N
    report.m = list(H.m)
    report.q = [[format_scalar(H.q[i][j]) for j in range(H.n)] for i in range(H.n)]

    # -- closed forms ------------------------------------------------------------
    alpha = modular_element_closed_form(H)
    G = H.group
    report.alpha_table = {
        f"e{j+1}": str(alpha.root(g)) for j, g in enumerate(G.generators())
    }
    rho = nakayama(H, 1, alpha)
    s2 = s2_automorphism(H)
    ord_formula = nakayama_order(H)
    report.orders = {"rho": ord_formula, "S^2": H.s2_order(), "alpha": alpha.order}

    gr = eigen_decompose(H, rho)
    led.add("rho.eigenvalues_form_group", gr.eigenvalues_form_group, "closed-form")
    thm = strongly_graded_theorem(H, alpha, gr)
    led.add("rho.eigenvalues_equal_L1", len(gr.components) == gr.L1.order
            and all(z in gr.L1 for z in gr.components), "cross-check",
            f"|L1| = {gr.L1.order}, {len(gr.components)} eigenvalues")
    if not thm.strongly_graded:
        led.add("grading.nsg_witness", bool(thm.counit_vanishing), "closed-form",
                "components with eps = 0: " + ", ".join(str(z) for z in thm.counit_vanishing))

    unimod_counit = unimodularity_via_counit(gr)
    led.failures("grading.alpha_counit_relation", alpha_counit_relation_failures(H, alpha, gr), "cross-check")
    rho_iter = next(l for l in range(1, H.N + 1) if rho.power(l).is_identity())
    led.add("order.rho_by_iteration", rho_iter == ord_formula, "cross-check",
            f"formula {ord_formula}, iteration {rho_iter}")
    led.add("order.s2_closed_form", s2.order() == H.s2_order(), "cross-check")

    eq = equidimensionality_check(H, alpha, gr, rho if level >= 1 else None, bound)
    led.add("grading.equidimensional", eq.equal, "closed-form",
            f"dims {sorted(set(eq.dimensions.values()))}, expected {eq.expected}")
    if level >= 1:
        if eq.theta_homomorphism is None:
            led.skip("grading.theta", "oracle", f"dim {H.dim} exceeds oracle bound {bound}")
        else:
            led.add("grading.theta_homomorphism", eq.theta_homomorphism, "closed-form")
            led.add("grading.theta_eigenvectors", bool(eq.theta_eigenvectors), "oracle")
            led.add("grading.theta_basis_fibers", bool(eq.fiber_sizes_match), "oracle",
                    f"alternative basis rank {eq.alternative_basis_rank}")

    unimod = Verdict("unimodular", alpha.is_trivial(), "closed-form",
                     {"counit_vanishing": unimod_counit})
    sg = Verdict("strongly_graded", thm.strongly_graded, "closed-form",
                 {"group_element_in_every_component": thm.every_component_has_group_element})
    equi = Verdict("equidimensional", eq.equal, "closed-form", {})
    order_v = Verdict("nakayama_order", ord_formula, "closed-form", {"iteration": rho_iter})
    rho_s2 = Verdict("rho_equals_S2", rho.eigenvalue_of == s2.eigenvalue_of, "closed-form",
                     {"unimodular": alpha.is_trivial()})

    oracle_ok = level >= 1 and H.dim <= bound
    if level >= 1 and not oracle_ok:
        led.skip("oracles", "oracle", f"dim {H.dim} exceeds oracle bound {bound}")

    # -- integral, modular element, Frobenius data --------------------------------------
    if oracle_ok:
        t = right_integral(H)
        led.failures("integral.right_integral", right_integral_failures(H, t), "oracle")
        ad = modular_element_derived(H, t)
        led.add("alpha.derived_equals_closed_form", ad.on_group == alpha.on_group, "cross-check")
        unimod.routes["derived_alpha"] = ad.is_trivial()

        phi = led.guarded("frobenius.dual_integral", "oracle", lambda: dual_right_integral(H, bound, t))
        if phi is not None:
            led.add("frobenius.dual_integral", True, "oracle", "solution space dimension 1, phi(t) = 1")
            fr = frobenius_property_check(H, phi, rho)
            led.add("frobenius.pairing_full_rank", fr.nondegenerate, "oracle",
                    f"rank {fr.pairing_rank} of {fr.dim}")
            led.failures("frobenius.nakayama_property", fr.nakayama_failures, "cross-check")

        basis = H.basis()
        elts = [H.from_monomial(b) for b in basis]
        alpha_f = convolution_power(alpha.as_functional(H), 1)
        led.failures("rho.sweedler_equals_closed_form",
                     [b for b, h in zip(basis, elts)
                      if nakayama_sweedler(H, h, 1, alpha_power=alpha_f) != rho(h)], "cross-check")
        rho_inv = rho.power(ord_formula - 1)
        led.failures("rho.inverse_sweedler",
                     [b for b, h in zip(basis, elts)
                      if nakayama_inverse_sweedler(H, h, alpha) != rho_inv(h)], "cross-check")
        led.failures("alpha.invariant_under_S2",
                     [b for b, h in zip(basis, elts) if alpha.evaluate(H.antipode(h, 2)) != alpha(b)],
                     "oracle")
        rep = nakayama_order_report(H)
        led.add("order.formula_vs_convolution_and_S2", rep.consistent, "cross-check",
                f"formula {rep.formula}, iteration {rep.by_iteration}, conv(alpha) "
                f"{rep.convolution_order_alpha}, S^2 {rep.s2_order} (iterated {rep.s2_order_by_iteration})")
        order_v.routes["lcm(conv alpha, ord S^2)"] = rep.formula if rep.consistent else -1
        rho_s2.routes["sweedler_S2"] = all(H.antipode(h, 2) == rho(h) for h in elts)

        _lemma_checks(H, led)

        # -- H_1 --------------------------------------------------------------------
        if thm.strongly_graded:
            try:
                h1 = compute_h1_presentation(H, alpha, rho)
            except (InconsistencyError, NotStronglyGraded) as e:
                led.add("h1.presentation", False, "oracle", str(e))
            else:
                gr.h1 = h1
                led.add("h1.y_in_H1", h1.y_in_h1, "oracle")
                for label, ok in zip(("group_commutation", "y_i_y_j", "y_i_power"), h1.relations_verified):
                    led.add(f"h1.relation.{label}", ok, "oracle")
                led.add("h1.basis_spans_H1", h1.basis_spans_h1, "oracle",
                        f"rank {h1.basis_rank}, dim H_1 = {h1.h1_dim}")
                led.add("h1.kN_membership", h1.kn_membership, "closed-form")
                led.add("h1.sign_claim", h1.sign_claim, "closed-form")
                report.h1 = {
                    "gamma": [H.monomial_name(H.make_monomial((0,) * H.n, g)) for g in h1.gamma],
                    "gamma_match_counts": h1.gamma_match_counts,
                    "gamma_tilde": [H.monomial_name(H.make_monomial((0,) * H.n, g)) for g in h1.gamma_tilde],
                    "y": [str(y) for y in h1.y],
                    "N": [H.monomial_name(H.make_monomial((0,) * H.n, g)) for g in h1.N_subgroup],
                    "relations_verified": list(h1.relations_verified),
                    "basis_rank": h1.basis_rank,
                    "h1_dim": h1.h1_dim,
                    "kN_membership": h1.kn_membership,
                    "sign_claim": h1.sign_claim,
                    "completeness_of_relations": "unproven",
                }

    # -- brute force and axiom suite ----------------------------------------------------
    if level >= 2 and oracle_ok:
        bf = strongly_graded_bruteforce(H, gr, bound)
        sg.routes["bruteforce"] = bf.strongly_graded
        led.add("grading.bruteforce_unit_vs_span", bf.agree, "oracle")
        led.add("grading.containment", bf.containment, "oracle")
        s2_gr = eigen_decompose(H, s2)
        s2_bf = strongly_graded_bruteforce(H, s2_gr, bound)
        if s2.is_identity():
            led.add("s2.grading_trivial", len(s2_gr.components) == 1, "closed-form")
        else:
            led.add("s2.not_strongly_graded", not s2_bf.strongly_graded, "oracle",
                    f"missing unit in {len(s2_bf.missing_unit)} components")
        _axiom_checks(H, led)
        basis = H.basis()
        led.failures("rho.multiplicative",
                     [(a, b) for a in basis for b in basis
                      if any(rho.eigenvalue_of[m] != rho.eigenvalue_of[a] * rho.eigenvalue_of[b]
                             for m in H.mul_monomials(a, b))], "oracle")
    elif level >= 2:
        led.skip("bruteforce", "oracle", f"dim {H.dim} exceeds oracle bound {bound}")

    report.rho_grading = _grading_dict(H, gr, list_monomials)
    if s2_grading:
        report.s2_grading = _grading_dict(H, eigen_decompose(H, s2), list_monomials)
    for v in (unimod, sg, equi, order_v, rho_s2):
        report.verdicts[v.name] = v
    return report


def _lemma_checks(H: HopfAlgebra, led: _Ledger) -> None:
    """The four elementary facts behind the integral formula, checked literally."""
    led.failures("lemma.pair_element_central", central_pair_failures(H), "oracle")
    led.failures("lemma.power_element_central", central_power_failures(H), "oracle")
    bad_group, bad_x = [], []
    sigmas = sigmas_for(H.n)
    for sigma in sigmas:
        bad_group += [(sigma, g) for g in integral_absorbs_group_failures(H, sigma)]
        if not integral_kills_last_x(H, sigma):
            bad_x.append(sigma)
    led.failures("lemma.integral_absorbs_group", bad_group, "oracle")
    led.failures("lemma.integral_kills_last_x", bad_x, "oracle")
    led.failures("integral.all_orderings",
                 [s for s in sigmas if right_integral_failures(H, right_integral(H, s))], "oracle")


def _axiom_checks(H: HopfAlgebra, led: _Ledger) -> None:
    led.failures("axioms.coassociativity", coassociativity_failures(H), "oracle")
    led.failures("axioms.counit", counit_failures(H), "oracle")
    led.failures("axioms.antipode", antipode_failures(H), "oracle")
    led.failures("axioms.comultiplicativity", comultiplicativity_failures(H), "oracle")
    led.failures("multiply.rewriting_oracle_words_le_3", oracle_disagreements(H, 3), "cross-check")
