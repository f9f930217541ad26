import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewmat.additive import (
    compose,
    format_additive,
    from_exponents,
    hat,
    psi,
    q_from_circuit,
    sigma_derivative,
    substitute,
)
from skewmat.hyperfield import HyperfieldError
from skewmat.kernel import ore_matroid, worked_example
from skewmat.ore import OreError, OrePoly, mu, ore_ring, parse_ore


def evaluate(q, point):
    """Plain evaluation of an additive polynomial at field elements."""
    K = q.field
    total = 0
    for var, row in q.terms.items():
        x = point[var]
        for j, c in row.items():
            total = K.fadd(total, K.mul(c, K.pow(x, q.p**j)))
    return total


def test_hat_examples():
    R = ore_ring(2, 2)
    K = R.K
    assert hat(parse_ore(R, "T^2+T")) == from_exponents(K, {"X": {4: 1, 2: 1}})
    assert hat(R.one) == from_exponents(K, {"X": {1: 1}})
    assert format_additive(hat(parse_ore(R, "T^2+T"))) == "X^(p^2)+X^p"


def test_psi_of_third_vector():
    cols, _ = worked_example(2, 2)
    K = cols[0][0].ring.K
    # v3 = (T^2+T, T^2)
    assert psi(cols[2]) == from_exponents(K, {"z1": {4: 1, 2: 1}, "z2": {4: 1}})


def test_exponent_must_be_power_of_p():
    K = ore_ring(3, 1).K
    with pytest.raises(HyperfieldError):
        from_exponents(K, {"X": {6: 1}})


def test_hat_needs_frobenius_twist():
    R = ore_ring(5, 1, "id")
    with pytest.raises(OreError):
        hat(R.T)


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3)])
def test_hat_turns_products_into_compositions_pointwise(p, k):
    R = ore_ring(p, k)
    K = R.K
    rng = random.Random(p * k)
    for _ in range(20):
        f, g = R.random_poly(rng, 3), R.random_poly(rng, 3)
        hf, hg, hfg = hat(f), hat(g), hat(f * g)
        for x in range(K.q):
            assert evaluate(hfg, {"X": x}) == evaluate(hf, {"X": evaluate(hg, {"X": x})})
        assert hfg == compose(hf, hg)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 15), st.integers(0, 15))
def test_additive_polys_are_additive(j, i, x, y):
    K = ore_ring(2, 4).K
    q = from_exponents(K, {"X": {2**j: 1, 2**i: K.generator()}})
    assert evaluate(q, {"X": K.fadd(x, y)}) == K.fadd(evaluate(q, {"X": x}), evaluate(q, {"X": y}))


@pytest.mark.parametrize("p,k", [(2, 2), (3, 1), (3, 2)])
def test_worked_example_q_vanishes(p, k):
    cols, _ = worked_example(p, k)
    om = ore_matroid(cols)
    K = om.ring.K
    U = om.circuit("123")
    q = q_from_circuit(U)
    expected = from_exponents(K, {"X1": {p**3: 1, p**2: 1}, "X2": {1: 1}, "X3": {p: K.fneg(1)}})
    assert q == expected
    xs = {f"X{e}": psi(c) for e, c in zip(om.labels, cols)}
    assert substitute(q, xs).is_zero()
    # pointwise: q(psi(v1)(z), ..., psi(v4)(z)) = 0 for every z in K^2
    for z1 in range(K.q):
        for z2 in range(K.q):
            z = {"z1": z1, "z2": z2}
            assert evaluate(q, {v: evaluate(x, z) for v, x in xs.items()}) == 0


def test_sigma_derivative_of_linear_form():
    R = ore_ring(3, 1)
    K, Hs = R.K, R.monomial_field()
    q = from_exponents(K, {"X1": {1: 1}, "X2": {1: K.fneg(1)}})
    assert sigma_derivative(q, ["X1", "X2", "X3"], Hs) == [Hs.monomial(1, 0), Hs.monomial(K.fneg(1), 0), Hs.zero]


def test_sigma_derivative_reads_lowest_power():
    R = ore_ring(2, 2)
    Hs = R.monomial_field()
    g = R.K.generator()
    q = hat(OrePoly(R, [0, 0, g, 1]), "X1")
    assert sigma_derivative(q, ["X1"], Hs) == [Hs.monomial(g, 2)]


def test_sigma_derivative_is_mu_on_random_circuits():
    rng = random.Random(5)
    checked = 0
    while checked < 30:
        R = ore_ring(*rng.choice([(2, 2), (3, 1), (3, 2), (2, 3)]))
        d = rng.randint(1, 3)
        cols = [[R.random_poly(rng, 2, density=0.5) for _ in range(d)] for _ in range(d + 1)]
        om = ore_matroid(cols)
        Hs = om.monomial_field
        for U in om.circuits.values():
            q = q_from_circuit(U)
            assert sigma_derivative(q, [f"X{e}" for e in om.labels], Hs) == [mu(f) for f in U]
            checked += 1
