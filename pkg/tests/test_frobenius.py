import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import build, example
from qls_nakayama.cyclotomic import RootOfUnity
from qls_nakayama.exact_linalg import Matrix, nullspace
from qls_nakayama.frobenius import (
    OracleSkipped,
    all_permutations,
    convolution_power,
    counit_functional,
    dual_right_integral,
    frobenius_property_check,
    is_unimodular,
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

INSTANCES = {
    "group_z4": lambda: build([4], [], []),
    "sweedler": lambda: build([2], [(1,)], [(1,)]),
    "taft4": lambda: build([4], [(1,)], [(1,)]),
    "z4_single": lambda: build([4], [(1,)], [(2,)], [1]),
    "z4_two": lambda: build([4], [(1,), (1,)], [(1,), (3,)], [0, 0], {(0, 1): 1}),
    "z4_mixed": lambda: build([4], [(1,), (1,)], [(2,), (2,)], [1, 2], {(0, 1): 1}),
    "z3xz3": lambda: build([3, 3], [(1, 0), (0, 1)], [(1, 1), (2, 1)]),
    "example2": lambda: example(2),
    "example3": lambda: example(3),
}
_cache = {}


def inst(name):
    if name not in _cache:
        _cache[name] = INSTANCES[name]()
    return _cache[name]


ALL = list(INSTANCES)
SMALL = [k for k in ALL if k not in ("z4_two", "z3xz3")]


def elts(H):
    return [H.from_monomial(b) for b in H.basis()]


# -- integrals ----------------------------------------------------------------------------


@pytest.mark.parametrize("name", ALL)
def test_every_ordering_gives_a_right_integral(name):
    H = inst(name)
    for sigma in all_permutations(H.n):
        assert right_integral_failures(H, right_integral(H, sigma)) == []


@pytest.mark.parametrize("name", ["sweedler", "z4_single", "z4_mixed", "example2", "taft4"])
def test_integral_space_is_one_dimensional_by_direct_solve(name):
    """Solve t h = eps(h) t on the generators by a nullspace computation."""
    H = inst(name)
    basis = H.basis()
    index = {b: k for k, b in enumerate(basis)}
    gens = [H.x(i) for i in range(H.n)] + [H.grp(g) for g in H.group.generators()]
    rows = []
    for h in gens:
        eps = H.counit(h)
        block = {}
        for k, b in enumerate(basis):
            img = H.from_monomial(b) * h - H.from_monomial(b).scale(eps)
            for mon, c in img.terms.items():
                block.setdefault(mon, {})[k] = c
        for mon in sorted(block):
            line = [H.zero_scalar] * len(basis)
            for k, c in block[mon].items():
                line[k] = c
            rows.append(line)
    (v,) = nullspace(Matrix(rows, H.N, len(basis)))
    t = right_integral(H)
    sol = {b: c for b, c in zip(basis, v) if c}
    mon = min(t.terms)
    ratio = sol[mon] / t.terms[mon]
    assert sol == {b: c * ratio for b, c in t.terms.items()}


# -- modular element -----------------------------------------------------------------------


@pytest.mark.parametrize("name", ALL)
def test_modular_element_derived_equals_closed_form(name):
    H = inst(name)
    assert modular_element_derived(H).on_group == modular_element_closed_form(H).on_group


def test_modular_element_values():
    assert modular_element_closed_form(inst("sweedler")).on_group((1,)) == -1
    assert modular_element_closed_form(inst("z4_two")).is_trivial()
    for n in range(1, 6):
        H = example(n)
        assert modular_element_closed_form(H).on_group((1,)) == (-1) ** n
        assert is_unimodular(H) == (n % 2 == 0)
    assert not is_unimodular(inst("sweedler"))


# -- dual integral and Frobenius ------------------------------------------------------------


def test_group_algebra_dual_integral_is_identity_indicator():
    H = inst("group_z4")
    phi = dual_right_integral(H)
    assert phi.values == {H.make_monomial((), (0,)): H.one_scalar}


def test_sweedler_dual_integral_lives_on_top_degree():
    H = inst("sweedler")
    phi = dual_right_integral(H)
    assert all(b.r == (1,) for b in phi.values)
    assert phi(right_integral(H)).is_one()


@pytest.mark.parametrize("name", ALL)
def test_frobenius_property(name):
    H = inst(name)
    rho = nakayama(H)
    rep = frobenius_property_check(H, dual_right_integral(H), rho)
    assert rep.nondegenerate and rep.nakayama_failures == []


def test_dual_integral_respects_bound():
    with pytest.raises(OracleSkipped):
        dual_right_integral(inst("z4_two"), max_dim=32)


# -- Nakayama automorphism ------------------------------------------------------------------


def test_sweedler_rho():
    H = inst("sweedler")
    rho = nakayama(H)
    assert rho(H.x(0)) == H.x(0)
    g = H.grp((1,))
    assert rho(g) == -g


@pytest.mark.parametrize("name", ALL)
def test_rho_on_x_times_inverse_group_like(name):
    H = inst(name)
    rho = nakayama(H)
    for i in range(H.n):
        u = H.x(i) * H.grp(H.group.inverse(H.gs[i]))
        assert rho(u) == u.scale(H.q[i][i].inv())


@pytest.mark.parametrize("name", ALL)
def test_rho_closed_form_equals_sweedler_form(name):
    H = inst(name)
    rho = nakayama(H)
    for h in elts(H):
        assert nakayama_sweedler(H, h) == rho(h)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("l", [2, 3])
def test_rho_powers_equal_sweedler_form(name, l):
    H = inst(name)
    alpha = modular_element_closed_form(H)
    rho_l = nakayama(H, l)
    a_l = convolution_power(alpha.as_functional(H), l)
    for h in elts(H):
        assert nakayama_sweedler(H, h, l, alpha_power=a_l) == rho_l(h)


@pytest.mark.parametrize("name", ALL)
def test_rho_inverse_sweedler_form(name):
    H = inst(name)
    alpha = modular_element_closed_form(H)
    rho = nakayama(H)
    for h in elts(H):
        assert rho(nakayama_inverse_sweedler(H, h, alpha)) == h


@pytest.mark.parametrize("name", ALL)
def test_alpha_invariant_under_s2(name):
    H = inst(name)
    alpha = modular_element_closed_form(H)
    for b, h in zip(H.basis(), elts(H)):
        assert alpha.evaluate(H.antipode(h, 2)) == alpha(b)


def test_unimodular_instance_has_rho_equal_s2():
    H = inst("z4_two")
    rho = nakayama(H)
    for h in elts(H):
        assert rho(h) == H.antipode(h, 2)


@pytest.mark.parametrize("name", ["sweedler", "taft4", "example3"])
def test_non_unimodular_rho_differs_from_s2(name):
    H = inst(name)
    assert nakayama(H).eigenvalue_of != s2_automorphism(H).eigenvalue_of


@pytest.mark.parametrize("name,order", [("group_z4", 1), ("sweedler", 2), ("example2", 2), ("taft4", 4),
                                        ("z4_two", 4), ("z3xz3", 3)])
def test_nakayama_order(name, order):
    H = inst(name)
    assert nakayama_order(H) == order
    rep = nakayama_order_report(H)
    assert rep.consistent and rep.formula == order


@given(st.sampled_from(SMALL).flatmap(
    lambda name: st.tuples(st.just(name), st.sampled_from(inst(name).basis()), st.sampled_from(inst(name).basis()))))
def test_rho_is_multiplicative(data):
    name, a, b = data
    H = inst(name)
    rho = nakayama(H)
    A, B = H.from_monomial(a), H.from_monomial(b)
    assert rho(A * B) == rho(A) * rho(B)


def test_rho_eigenvalues_are_roots_in_mu_n():
    H = inst("z3xz3")
    for z in nakayama(H).eigenvalues():
        assert isinstance(z, RootOfUnity) and z.conductor == 3


def test_convolution_unit():
    H = inst("sweedler")
    eps = counit_functional(H)
    alpha = modular_element_closed_form(H).as_functional(H)
    assert convolution_power(alpha, 0) == eps
    assert convolution_power(alpha, 2) == eps
