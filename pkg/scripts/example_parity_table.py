"""Quantum linear spaces over Z2 with n generators and all chi_i(g) = -1:
strong gradedness and unimodularity as n varies, by every available route.

    python scripts/example_parity_table.py [--max-n 6]
"""

import argparse

from qls_nakayama import FiniteAbelianGroup, LiftingDatum, validate
from qls_nakayama.frobenius import modular_element_closed_form, nakayama
from qls_nakayama.grading import (
    eigen_decompose,
    strongly_graded_bruteforce,
    strongly_graded_theorem,
    unimodularity_via_counit,
)


def row(n, max_dim):
    G = FiniteAbelianGroup([2])
    H = validate(LiftingDatum(G, [G(1)] * n, [G.character(1)] * n))
    alpha = modular_element_closed_form(H)
    gr = eigen_decompose(H, nakayama(H, 1, alpha))
    thm = strongly_graded_theorem(H, alpha, gr)
    bf = strongly_graded_bruteforce(H, gr, max_dim).strongly_graded if H.dim <= max_dim else None
    return n, H.dim, alpha.on_group((1,)), thm.strongly_graded, thm.every_component_has_group_element, bf, \
        alpha.is_trivial(), unimodularity_via_counit(gr)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-dim", type=int, default=128)
    args = p.parse_args()
    yn = {True: "yes", False: "no", None: "skip"}
    print(f"{'n':>2} {'dim':>5} {'alpha(g)':>9}  {'L1=L2':<6}{'grp elt':<8}{'brute':<6}  {'unimod':<7}{'counit':<7}")
    for n, dim, a, thm, grp, bf, uni, cnt in (row(n, args.max_dim) for n in range(1, args.max_n + 1)):
        print(f"{n:>2} {dim:>5} {str(a):>9}  {yn[thm]:<6}{yn[grp]:<8}{yn[bf]:<6}  {yn[uni]:<7}{yn[cnt]:<7}")


if __name__ == "__main__":
    main()
