import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import build, example
from qls_nakayama.abelian_group import FiniteAbelianGroup
from qls_nakayama.cyclotomic import CycScalar, root_of_unity
from qls_nakayama.hopf_axioms import (
    antipode_failures,
    central_pair_failures,
    central_power_failures,
    coassociativity_failures,
    comultiplicativity_failures,
    counit_failures,
)
from qls_nakayama.hopf_core import InvalidDatum, LiftingDatum, WordTooLong, validate, validation_issues

INSTANCES = {
    "sweedler": lambda: build([2], [(1,)], [(1,)]),
    "taft3": lambda: build([3], [(1,)], [(1,)]),
    "z4_single": lambda: build([4], [(1,)], [(2,)], [1]),
    "z4_two": lambda: build([4], [(1,), (1,)], [(1,), (3,)], [0, 0], {(0, 1): 1}),
    "z4_mixed": lambda: build([4], [(1,), (1,)], [(2,), (2,)], [1, Fraction(1, 2)], {(0, 1): 1}),
    "z4xz2": lambda: build([4, 2], [(1, 0), (1, 0), (0, 1)], [(2, 0), (2, 0), (0, 1)], [1, 3, 0], {(0, 1): 1}),
    "example3": lambda: example(3),
}
_cache = {}


def inst(name):
    if name not in _cache:
        _cache[name] = INSTANCES[name]()
    return _cache[name]


# -- validation -------------------------------------------------------------------------


def _datum(orders, g, chi, lam_diag=None, lam_off=None):
    G = FiniteAbelianGroup(orders)
    N = G.exponent
    return LiftingDatum(G, [G(*e) for e in g], [G.character(*w) for w in chi],
                        [CycScalar.rational(N, v) for v in (lam_diag or [0] * len(g))],
                        {k: CycScalar.rational(N, v) for k, v in (lam_off or {}).items()})


def test_trivial_braiding_rejected():
    issues = validation_issues(_datum([2], [(1,)], [(0,)]))
    assert [i.code for i in issues] == ["q_ii"]
    assert str(issues[0]) == "q_11 = 1"


def test_non_inverse_off_diagonal_rejected():
    # q_12 = chi_2(g_1) = i, q_21 = chi_1(g_2) = -1
    issues = validation_issues(_datum([4], [(1,), (2,)], [(2,), (1,)]))
    assert "q_ij" in [i.code for i in issues]


def test_power_deformation_needs_trivial_character_power():
    # Taft Z3 with lambda != 0: chi^3 trivial but fine; Z4 with chi weight 1 in Z8 is not
    assert not validation_issues(_datum([3], [(1,)], [(1,)], [1]))
    issues = validation_issues(_datum([8], [(2,)], [(1,)], [1]))
    assert [i.code for i in issues] == ["lambda_i"]


def test_linking_needs_inverse_characters():
    issues = validation_issues(_datum([4], [(1,), (1,)], [(2,), (2,)], None, {(0, 1): 1}))
    assert not issues
    issues = validation_issues(_datum([4], [(1,), (1,)], [(1,), (1,)], None, {(0, 1): 1}))
    codes = [i.code for i in issues]
    assert "lambda_ij" in codes and "q_ij" in codes


def test_validate_collects_every_issue():
    with pytest.raises(InvalidDatum) as e:
        validate(_datum([4], [(0,), (1,)], [(1,), (0,)]))
    # q_11 = 1, q_22 = 1 and q_12 q_21 = i
    assert [i.code for i in e.value.issues] == ["q_ii", "q_ii", "q_ij"]


@pytest.mark.parametrize("name,dim", [("sweedler", 4), ("taft3", 9), ("z4_single", 8), ("z4_two", 64),
                                      ("z4_mixed", 16), ("z4xz2", 64), ("example3", 16)])
def test_dimension(name, dim):
    H = inst(name)
    assert H.dim == dim == len(H.basis())


# -- the defining relations hold ---------------------------------------------------------


@pytest.mark.parametrize("name", list(INSTANCES))
def test_defining_relations(name):
    H = inst(name)
    G = H.group
    one = H.one()
    for i in range(H.n):
        xi = H.x(i)
        for g in G.exponent_tuples():
            assert H.grp(g) * xi == (xi * H.grp(g)).scale(H.chis[i](g))
        gm = H.grp(G.power(H.gs[i], H.m[i]))
        assert xi ** H.m[i] == (one - gm).scale(H.lambda_diag[i])
        for j in range(H.n):
            if i == j:
                continue
            xj = H.x(j)
            gij = H.grp(G.compose(H.gs[i], H.gs[j]))
            assert xi * xj == (xj * xi).scale(H.q[i][j]) + (one - gij).scale(H.lam[i][j])


def test_derived_lambda_ji():
    H = inst("z4_two")
    # lambda_21 = -q_12^{-1} lambda_12 with q_12 = chi_2(g_1) = -i
    assert H.lam[1][0] == -(root_of_unity(4, 3).inv())


# -- multiplication against the rewriting oracle ------------------------------------------


def _symbols(H):
    return [f"x{i+1}" for i in range(H.n)] + [g for g in H.group.generators() if g.order > 1]


def _word_product(H, word):
    out = H.one()
    for s in word:
        out = out * (H.x(int(s[1:]) - 1) if isinstance(s, str) else H.grp(s))
    return out


@pytest.mark.parametrize("name", list(INSTANCES))
def test_multiply_matches_rewriting_on_short_words(name):
    H = inst(name)
    syms = _symbols(H)
    for L in range(1, 5):
        for word in itertools.product(syms, repeat=L):
            assert _word_product(H, word) == H.free_multiply_oracle(list(word)), word


@given(st.sampled_from(["z4_two", "z4_mixed", "z4xz2", "taft3"]).flatmap(
    lambda name: st.tuples(st.just(name), st.lists(st.sampled_from(_symbols(inst(name))), max_size=8))))
def test_multiply_matches_rewriting_random_words(data):
    name, word = data
    H = inst(name)
    assert _word_product(H, word) == H.free_multiply_oracle(word)


def test_oracle_word_bound():
    H = inst("sweedler")
    with pytest.raises(WordTooLong):
        H.free_multiply_oracle(["x1"] * 13)


@given(st.sampled_from(["z4_two", "z4_mixed", "z4xz2", "example3"]).flatmap(
    lambda name: st.tuples(st.just(name), *[st.sampled_from(inst(name).basis())] * 3)))
def test_associativity(data):
    name, a, b, c = data
    H = inst(name)
    A, B, C = (H.from_monomial(m) for m in (a, b, c))
    assert (A * B) * C == A * (B * C)


@pytest.mark.parametrize("name", ["sweedler", "taft3", "z4_single", "z4_mixed", "example3"])
def test_associativity_exhaustive_small(name):
    H = inst(name)
    assert H.dim <= 16
    els = [H.from_monomial(b) for b in H.basis()]
    for a in els:
        for b in els:
            ab = a * b
            for c in els:
                assert ab * c == a * (b * c)


# -- coalgebra and antipode ---------------------------------------------------------------


def test_sweedler_structure_maps(sweedler):
    H = sweedler
    x, g = H.x(0), H.grp((1,))
    assert H.comultiply(x) == H.tensor(g, x) + H.tensor(x, H.one())
    assert H.counit(x).is_zero() and H.counit(g).is_one()
    assert H.antipode(x) == -(g * x)
    assert H.antipode(x, 2) == -x
    assert H.antipode(g) == g


def _q_binomial(n, k, q):
    one = q * q.inv()
    num = one
    den = one
    for j in range(k):
        num = num * (one - q ** (n - j))
        den = den * (one - q ** (j + 1))
    return num / den


@pytest.mark.parametrize("name", ["taft3", "z4_two", "z4xz2"])
def test_comultiply_powers_by_q_binomial(name):
    H = inst(name)
    G = H.group
    for i in range(H.n):
        q = H.q[i][i]
        for r in range(H.m[i]):
            want = H.tensor(H.zero(), H.zero())
            for k in range(r + 1):
                left = H.x(i) ** k * H.grp(G.power(H.gs[i], r - k))
                want = want + H.tensor(left, H.x(i) ** (r - k)).scale(_q_binomial(r, k, q))
            assert H.comultiply(H.x(i) ** r) == want


@pytest.mark.parametrize("name", list(INSTANCES))
def test_antipode_squared_on_generators(name):
    H = inst(name)
    for i in range(H.n):
        assert H.antipode(H.x(i), 2) == H.x(i).scale(H.q[i][i].inv())
        gi_inv = H.grp(H.group.inverse(H.gs[i]))
        assert H.antipode(H.x(i)) == -(gi_inv * H.x(i))


@pytest.mark.parametrize("name", ["sweedler", "taft3", "z4_single", "z4_mixed", "example3"])
def test_hopf_axioms_small(name):
    H = inst(name)
    assert not coassociativity_failures(H)
    assert not counit_failures(H)
    assert not antipode_failures(H)
    assert not comultiplicativity_failures(H)


# -- central elements -----------------------------------------------------------------------


@pytest.mark.parametrize("name", list(INSTANCES))
def test_power_element_central(name):
    assert central_power_failures(inst(name)) == []


@pytest.mark.parametrize("name", list(INSTANCES))
def test_pair_element_commutation_pattern(name):
    """lambda_ji g_i g_j commutes with G and with x_l for l outside {i, j};
    with x_i exactly when q_ii^2 = 1."""
    H = inst(name)
    G = H.group
    for i, j in itertools.permutations(range(H.n), 2):
        if not H.lam[j][i]:
            continue
        c = H.grp(G.compose(H.gs[i], H.gs[j]))
        for g in G.generators():
            assert c * H.grp(g) == H.grp(g) * c
        for l in range(H.n):
            commutes = c * H.x(l) == H.x(l) * c
            if l in (i, j):
                assert commutes == (H.q[l][l] ** 2).is_one()
            else:
                assert commutes


def test_pair_element_not_central_when_q_has_order_four():
    H = inst("z4_two")
    g2 = H.grp((2,))
    assert g2 * H.x(0) == -(H.x(0) * g2)
    assert central_pair_failures(H)
