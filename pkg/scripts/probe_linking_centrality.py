"""Random search over linked two-generator data: does lambda_21 g_1 g_2 commute
with x_1?  Prints every datum where it does not, together with the facts that
remain true there (t is a right integral, alpha derived = closed form, rho by
closed form = rho in Sweedler form).

    python scripts/probe_linking_centrality.py [--trials 200] [--seed 0]
"""

import argparse
import random

from qls_nakayama import FiniteAbelianGroup, LiftingDatum
from qls_nakayama.cyclotomic import CycScalar
from qls_nakayama.frobenius import (
    modular_element_closed_form,
    modular_element_derived,
    nakayama,
    nakayama_sweedler,
    right_integral,
    right_integral_failures,
)
from qls_nakayama.hopf_axioms import central_pair_failures
from qls_nakayama.hopf_core import HopfAlgebra, validation_issues


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=96)
    args = p.parse_args()
    rng = random.Random(args.seed)
    seen, linked, noncentral = set(), 0, 0
    for _ in range(args.trials):
        d = rng.choice([4, 6, 8])
        G = FiniteAbelianGroup([d])
        g1, g2 = rng.randrange(d), rng.randrange(d)
        w1 = rng.randrange(d)
        w2 = (-w1) % d  # chi_1 chi_2 trivial, so the pair may be linked
        key = (d, g1, g2, w1)
        if key in seen:
            continue
        seen.add(key)
        datum = LiftingDatum(G, [G(g1), G(g2)], [G.character(w1), G.character(w2)],
                             [CycScalar.zero(d)] * 2, {(0, 1): CycScalar.one(d)})
        if validation_issues(datum):
            continue
        H = HopfAlgebra(datum)
        if H.dim > args.max_dim or (g1 + g2) % d == 0:
            continue
        linked += 1
        fails = central_pair_failures(H)
        if not fails:
            continue
        noncentral += 1
        alpha = modular_element_closed_form(H)
        rho = nakayama(H, 1, alpha)
        integral_ok = not right_integral_failures(H, right_integral(H))
        alpha_ok = modular_element_derived(H).on_group == alpha.on_group
        rho_ok = all(nakayama_sweedler(H, H.from_monomial(b), 1, alpha) == rho(H.from_monomial(b))
                     for b in H.basis())
        print(f"Z{d} g=({g1},{g2}) chi weights=({w1},{w2}) q_11={H.q[0][0]} dim {H.dim}: "
              f"{len(fails)} commutation failures; integral {integral_ok}, alpha {alpha_ok}, rho {rho_ok}")
    print(f"{linked} linked data with g_1 g_2 != 1, {noncentral} with a non-central lambda_21 g_1 g_2")


if __name__ == "__main__":
    main()
