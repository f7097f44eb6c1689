import cmath
from fractions import Fraction

import pytest
from hypothesis import settings

from qls_nakayama import FiniteAbelianGroup, LiftingDatum, validate
from qls_nakayama.cyclotomic import CycScalar

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def numeric(s: CycScalar) -> complex:
    """Evaluate at the principal root exp(2 pi i / N); an independent check on exact arithmetic."""
    z = cmath.exp(2j * cmath.pi / s.N)
    return sum(complex(float(c)) * z ** k for k, c in enumerate(s.coeffs))


def scalar(N, value) -> CycScalar:
    return CycScalar.rational(N, Fraction(value))


def build(orders, g, chi, lam_diag=None, lam_off=None):
    G = FiniteAbelianGroup(orders)
    N = G.exponent
    n = len(g)
    return validate(LiftingDatum(
        G,
        [G(*e) for e in g],
        [G.character(*w) for w in chi],
        [scalar(N, v) for v in (lam_diag or [0] * n)],
        {k: scalar(N, v) for k, v in (lam_off or {}).items()},
    ))


@pytest.fixture(scope="session")
def sweedler():
    return build([2], [(1,)], [(1,)])


@pytest.fixture(scope="session")
def z4_single():
    return build([4], [(1,)], [(2,)], [1])


@pytest.fixture(scope="session")
def z4_two():
    """chi = i, -i linked by lambda_12 = 1; unimodular, dim 64."""
    return build([4], [(1,), (1,)], [(1,), (3,)], [0, 0], {(0, 1): 1})


@pytest.fixture(scope="session")
def z4_mixed():
    return build([4], [(1,), (1,)], [(2,), (2,)], [1, Fraction(1, 2)], {(0, 1): 1})


def example(n):
    return build([2], [(1,)] * n, [(1,)] * n)


def random_datum_strategy(max_dim=64):
    """Hypothesis strategy for valid lifting data over small groups, lambdas switched on where allowed."""
    from hypothesis import assume
    from hypothesis import strategies as st

    from qls_nakayama.hopf_core import HopfAlgebra, validation_issues

    @st.composite
    def strat(draw):
        orders = draw(st.sampled_from([[2], [3], [4], [6], [2, 2], [4, 2]]))
        G = FiniteAbelianGroup(orders)
        N = G.exponent
        n = draw(st.integers(1, 2))
        elem = st.tuples(*[st.integers(0, d - 1) for d in orders])
        g = [G(*draw(elem)) for _ in range(n)]
        chi = [G.character(*draw(elem)) for _ in range(n)]
        base = LiftingDatum(G, g, chi, [CycScalar.zero(N)] * n, {})
        assume(not validation_issues(base))
        lam = [CycScalar.rational(N, draw(st.sampled_from([0, 1, 2]))) for _ in range(n)]
        off = {(0, 1): CycScalar.rational(N, draw(st.sampled_from([0, 1])))} if n == 2 else {}
        datum = LiftingDatum(G, g, chi, lam, off)
        # drop deformations the datum does not admit
        for issue in validation_issues(datum):
            if issue.code == "lambda_i":
                lam[issue.indices[0]] = CycScalar.zero(N)
            elif issue.code == "lambda_ij":
                off = {}
        datum = LiftingDatum(G, g, chi, lam, off)
        assert not validation_issues(datum)
        H = HopfAlgebra(datum)
        assume(H.dim <= max_dim)
        return H

    return strat()
