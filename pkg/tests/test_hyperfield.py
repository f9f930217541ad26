from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewmat.axioms import axiom_check_hyperfield, check_automorphism
from skewmat.gf import frobenius, gf
from skewmat.hyperfield import INF, HyperfieldError, d3, hyperfield_from_spec, krasner, sign, zmin

# -- an independent encoding of D3: d_i acts on Z/6 by x -> i + x (i even) or i - x (i odd)


def affine(i):
    return (i % 6, 1 if i % 2 == 0 else -1)


def compose(f, g):
    (a, s), (b, t) = f, g
    return ((a + s * b) % 6, s * t)


def oracle_mul(i, j):
    f = compose(affine(i), affine(j))
    return next(k for k in range(6) if affine(k) == f)


def oracle_add(i, j):
    """Sum of d_i and d_j as a set of indices, None standing for 0."""
    gap = (j - i) % 6
    if gap > 3:
        return oracle_add(j, i)
    return [{i}, {i, j}, {i, (i + 1) % 6, j}, set(range(6)) | {None}][gap]


def oracle_right_distributivity_failures():
    els = list(range(6)) + [None]

    def add(x, y):
        if x is None:
            return {y}
        if y is None:
            return {x}
        return oracle_add(x, y)

    def mul(x, y):
        return None if x is None or y is None else oracle_mul(x, y)

    bad = 0
    for a, y, z in product(els, repeat=3):
        lhs = {mul(s, a) for s in add(y, z)}
        rhs = add(mul(y, a), mul(z, a))
        bad += lhs != rhs
    return bad


def test_d3_multiplication_is_the_dihedral_group():
    H = d3()
    for i, j in product(range(6), repeat=2):
        assert H.mul(f"d{i}", f"d{j}") == f"d{oracle_mul(i, j)}"
    assert not H.commutative


def test_d3_addition_matches_the_defining_table():
    H = d3()
    for i, j in product(range(6), repeat=2):
        expected = {"0" if k is None else f"d{k}" for k in oracle_add(i, j)}
        assert set(H.add(f"d{i}", f"d{j}")) == expected


def test_d3_left_distributive_but_not_right():
    report = axiom_check_hyperfield(d3())
    counts = report.counts()
    # [DERIVED] count from the independent affine-map encoding above
    assert counts["right distributivity"] == oracle_right_distributivity_failures() == 96
    assert all(v == 0 for name, v in counts.items() if name != "right distributivity")
    assert report.checks["right distributivity"].witness == ("d1", "d0", "d2")


def test_d3_witness_by_hand():
    H = d3()
    # (d0 + d2) d1 = {d0, d1, d2} d1 = {d1, d0, d3} but d1 + d3 = {d1, d2, d3}
    lhs = H.scale_set(H.add("d0", "d2"), "d1", "right")
    rhs = H.add(H.mul("d0", "d1"), H.mul("d2", "d1"))
    assert set(lhs) == {"d0", "d1", "d3"}
    assert set(rhs) == {"d1", "d2", "d3"}


@pytest.mark.parametrize(
    "spec", ["krasner", "sign", "zmin", "gf:2:2", "gf:3:2", "gf:5", "mono:gf:2:2:frob", "mono:gf:3:2:frob", "mono:sign:id"]
)
def test_hyperfield_axioms_pass(spec):
    assert axiom_check_hyperfield(hyperfield_from_spec(spec)).ok


@pytest.mark.parametrize(
    "i,j,value",
    [(0, 1, "d1"), (1, 1, "d0"), (3, 2, "d1"), (2, 3, "d5")],
)
def test_d3_products(i, j, value):
    # d_i d_j = d_(i+j) for even i and d_(i-j) for odd i  [TRIVIAL]
    assert d3().mul(f"d{i}", f"d{j}") == value


def test_krasner_and_sign_tables():
    K, S = krasner(), sign()
    assert K.add(1, 1) == {0, 1}
    assert S.add(1, -1) == {0, 1, -1}
    assert S.add(1, 1) == {1}
    assert S.mul(-1, -1) == 1


def test_zmin_sums():
    Z = zmin()
    assert Z.add(3, 5) == {3}
    s = Z.add(3, 3)
    assert 3 in s and 7 in s and INF in s and 2 not in s
    assert Z.mul(3, INF) == INF


def test_monomial_product_twists():
    M = hyperfield_from_spec("mono:gf:2:2:frob")
    # g T * g = g sigma(g) T = g^3 T = T  [TRIVIAL]
    assert M.mul(M.parse("g*T"), M.parse("g")) == M.parse("T")
    assert M.mul(M.parse("g"), M.parse("g*T")) == M.parse("g^2*T") == M.parse("(g+1)*T")


def test_monomial_sums():
    M = hyperfield_from_spec("mono:gf:2:2:frob")
    x = M.parse("g*T")
    assert M.add(x, M.parse("T^2")) == {x}
    assert M.add(x, M.parse("T")) == {M.parse("(g+1)*T")}
    cancel = M.add(x, x)
    assert M.zero in cancel and M.parse("T^2") in cancel and M.parse("T") not in cancel


@given(st.sampled_from(range(4)), st.integers(-3, 3), st.sampled_from(range(1, 4)), st.integers(-3, 3))
def test_monomial_inverse(a, i, b, j):
    M = hyperfield_from_spec("mono:gf:2:2:frob")
    x = M.monomial(b, j)
    assert M.mul(x, M.inv(x)) == M.one == M.mul(M.inv(x), x)
    if a:
        y = M.monomial(a, i)
        assert M.inv(M.mul(x, y)) == M.mul(M.inv(y), M.inv(x))


def test_frobenius_checks_as_automorphism():
    assert check_automorphism(gf(3, 2), frobenius(3, 2)).ok


def test_unknown_spec():
    with pytest.raises(HyperfieldError):
        hyperfield_from_spec("quaternions")


def test_single_mutations_are_reported():
    H = d3()
    base = axiom_check_hyperfield(H).counts()
    for x, y in [("d0", "d1"), ("d2", "d5"), ("d3", "d3")]:
        bent = H.with_sum(x, y, set(H.add(x, y)) ^ {"d4"})
        assert axiom_check_hyperfield(bent).counts() != base
        other = next(z for z in H.nonzero() if z != H.mul(x, y))
        bent = H.with_product(x, y, other)
        assert axiom_check_hyperfield(bent).counts() != base
