import random
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewmat.gf import gf
from skewmat.hmatroid import (
    Coordinates,
    Signature,
    SignatureError,
    check_circuit_axioms,
    check_coordinates,
    check_plucker,
    conjugacy_orbit,
    coords_from_signature,
    coords_to_gp,
    cr_properties_check,
    cross_ratio,
    dual_coords,
    dual_matroid,
    gp_check,
    gp_to_coords,
    minor_coords,
    minor_locality_check,
    minor_signature,
    orthogonality_check,
    pushforward,
    rescale,
    rescale_coords,
    signature_from_coords,
    u24_classify,
    u24_make,
    u24_solutions,
)
from skewmat.homs import compose, kappa, zeta
from skewmat.hyperfield import d3, hyperfield_from_spec, krasner, sign
from skewmat.kernel import ore_matroid, worked_example
from skewmat.matroid import Matroid, bits

# -- an oracle for represented matroids over GF(p) -------------------------------


def det(rows, p):
    """Determinant mod p by cofactor expansion (oracle)."""
    n = len(rows)
    if n == 1:
        return rows[0][0] % p
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det(minor, p)
    return total % p


def represented(cols, p):
    """Circuits of the column vectors over GF(p), found by brute force: every
    normalized vector on a support of minimal size with sum X_e v_e = 0."""
    n, d = len(cols), len(cols[0])
    K = gf(p)
    vectors = []
    supports = []
    for size in range(1, d + 2):
        for S in combinations(range(n), size):
            m = sum(1 << i for i in S)
            if any(s & m == s for s in supports):
                continue
            for tail in product(range(1, p), repeat=size - 1):
                coeffs = (1,) + tail
                if all(sum(c * cols[e][i] for c, e in zip(coeffs, S)) % p == 0 for i in range(d)):
                    X = [0] * n
                    for c, e in zip(coeffs, S):
                        X[e] = c
                    vectors.append(tuple(X))
                    supports.append(m)
                    break
    return Signature(K, [str(i + 1) for i in range(n)], vectors, "left")


@st.composite
def gf_configurations(draw):
    p = draw(st.sampled_from([3, 5, 7]))
    d = draw(st.integers(2, 3))
    n = draw(st.integers(d + 1, 5))
    cols = [draw(st.lists(st.integers(0, p - 1), min_size=d, max_size=d)) for _ in range(n)]
    for i in range(d):
        cols[i] = [1 if j == i else 0 for j in range(d)]
    return cols, p


@given(gf_configurations())
def test_coordinates_are_determinant_ratios(conf):
    cols, p = conf
    C = represented(cols, p)
    cc = coords_from_signature(C)
    K = C.field
    r = C.matroid.rank
    assert r == len(cols[0])
    for (B, B2), x in cc.values.items():
        F = bits(B & B2)
        a, b = bits(B & ~B2)[0], bits(B2 & ~B)[0]
        phi = lambda e: det([[cols[j][i] for j in F + [e]] for i in range(r)], p)  # noqa: E731
        assert x == K.mul(phi(a), K.inv(phi(b)))


@given(gf_configurations())
def test_represented_matroids_pass_everything(conf):
    C = represented(*conf)
    cc = coords_from_signature(C)
    assert check_circuit_axioms(C).ok
    assert check_plucker(cc).ok
    assert check_coordinates(cc).ok
    assert signature_from_coords(cc) == C
    D = dual_matroid(C)
    assert orthogonality_check(C, D, len(C.ground)).ok
    assert dual_matroid(D) == C


@given(gf_configurations())
def test_grassmann_plucker_round_trip(conf):
    C = represented(*conf)
    cc = coords_from_signature(C)
    phi = coords_to_gp(cc)
    assert gp_check(phi).ok
    assert gp_to_coords(phi).values == cc.values


# -- U_{2,4} over D3 -------------------------------------------------------------


def oracle_c3_u24(H, x, y):
    """Circuit elimination on U_H(x, y) by direct enumeration (oracle).

    Every pair of distinct circuits of U_{2,4} is modular.  For all left
    scalings a X, b Y with a X_e = -b Y_e some scaling of the remaining circuit
    must lie in a X ⊞ b Y entrywise.
    """
    vecs = [(H.zero, H.one, H.one, H.one), (H.one, H.zero, H.neg(H.one), H.neg(x)), (H.one, H.one, H.zero, y), (H.one, x, H.neg(y), H.zero)]
    nz = H.nonzero()
    for X, Y in product(vecs, repeat=2):
        if X == Y:
            continue
        common = [e for e in range(4) if X[e] != H.zero and Y[e] != H.zero]
        for e in common:
            Z = vecs[e]
            for a, b in product(nz, repeat=2):
                aX = [H.mul(a, t) for t in X]
                bY = [H.mul(b, t) for t in Y]
                if aX[e] != H.neg(bY[e]):
                    continue
                if not any(all(H.mul(c, z) in H.add(u, v) for u, v, z in zip(aX, bY, Z)) for c in nz):
                    return False
    return True


def d3_instances():
    H = d3()
    return [(x, y) for x in H.nonzero() for y in H.nonzero() if H.one in H.add(x, y)]


def test_d3_u24_instances_oracle():
    H = d3()
    passing = {(x, y) for x, y in d3_instances() if oracle_c3_u24(H, x, y)}
    assert len(d3_instances()) == 17
    assert passing == {("d0", "d0"), ("d0", "d3"), ("d3", "d0")}
    for x, y in d3_instances():
        M = u24_make(H, x, y)
        assert check_circuit_axioms(M).ok == ((x, y) in passing)


def test_circuits_iff_plucker_on_all_d3_pairs():
    H = d3()
    for x, y in product(H.nonzero(), repeat=2):
        M = u24_make(H, x, y, check=False)
        cc = coords_from_signature(M)
        assert check_circuit_axioms(M).ok == check_plucker(cc).ok
        assert signature_from_coords(cc) == M


def test_d3_orthogonality_gap():
    # a D3 instance passing (C3) and (P0)-(P4) whose dual fails ⊥3 once right
    # scalings are enumerated (D3 is not right distributive)
    H = d3()
    M = u24_make(H, "d0", "d3")
    D = dual_matroid(M)
    assert check_plucker(coords_from_signature(M)).ok
    assert not orthogonality_check(M, D, 3).ok
    reps = [all(H.nary_contains([H.mul(a, b) for a, b in zip(X, Y) if a != H.zero and b != H.zero], H.zero) for Y in D.vectors) for X in M.vectors]
    assert all(reps)


@pytest.mark.parametrize("spec", ["gf:5", "gf:7", "gf:2:2", "gf:3:2", "sign", "krasner"])
def test_u24_duality_over_distributive_hyperfields(spec):
    H = hyperfield_from_spec(spec)
    for x, y in product(H.nonzero(), repeat=2):
        if H.one not in H.add(x, y):
            continue
        M = u24_make(H, x, y)
        p_ok = check_plucker(coords_from_signature(M)).ok
        assert p_ok
        D = dual_matroid(M)
        assert orthogonality_check(M, D, 3).ok
        assert dual_matroid(D) == M


@pytest.mark.parametrize("spec", ["gf:2:2", "gf:3:2"])
def test_u24_classification_commutative(spec):
    H = hyperfield_from_spec(spec)
    rng = random.Random(3)
    for x, y in product(H.nonzero(), repeat=2):
        if H.one not in H.add(x, y):
            continue
        M = u24_make(H, x, y)
        rho = [rng.choice(H.nonzero()) for _ in range(4)]
        R = rescale(M, rho)
        assert u24_classify(R) == (x, y)
        assert u24_solutions(R) == {(x, y)} == conjugacy_orbit(H, x, y)


def test_u24_classification_skew():
    H = hyperfield_from_spec("mono:gf:2:2:frob")
    x, y = H.parse("g"), H.parse("g+1")
    assert H.one in H.add(x, y)
    M = u24_make(H, x, y)
    rng = random.Random(5)
    betas = [b for b in H.window(-3, 3) if b != H.zero]
    conj = lambda b, t: H.mul(H.mul(b, t), H.inv(b))  # noqa: E731
    for _ in range(10):
        rho = [rng.choice(betas) for _ in range(4)]
        x2, y2 = u24_classify(rescale(M, rho))
        assert any(conj(b, x) == x2 and conj(b, y) == y2 for b in betas)


def test_d3_classification():
    H = d3()
    for x, y in [("d0", "d0"), ("d0", "d3"), ("d3", "d0")]:
        M = u24_make(H, x, y)
        assert u24_classify(M) == (x, y)
        assert (x, y) in u24_solutions(M)


# -- coordinates, rescaling, minors ---------------------------------------------


def example_signature(p=2, k=2):
    cols, _ = worked_example(p, k)
    return ore_matroid(cols).mu_signature()


def test_rescaling_transforms_coordinates():
    M = example_signature()
    H = M.field
    rho = [H.parse(s) for s in ("g*T", "T^-2", "(g+1)", "g*T^3")]
    assert coords_from_signature(rescale(M, rho)).values == rescale_coords(coords_from_signature(M), rho).values
    rho2 = [H.parse(s) for s in ("T", "g", "T^2", "1")]
    # circuits scale by rho^-1 on the right, so the second rescaling composes on the left
    both = [H.mul(b, a) for a, b in zip(rho, rho2)]
    assert rescale(rescale(M, rho), rho2) == rescale(M, both)


def test_rescaling_preserves_the_axioms_over_the_monomial_hyperfield():
    M = example_signature()
    H = M.field
    R = rescale(M, [H.parse(s) for s in ("g*T", "T^-2", "(g+1)", "g*T^3")])
    assert check_circuit_axioms(R).ok
    assert check_plucker(coords_from_signature(R)).ok


def test_d3_rescaling_breaks_elimination():
    # right-multiplying entries commutes with ⊞ only under right distributivity
    H = d3()
    M = u24_make(H, "d0", "d3")
    R = rescale(M, ["d1", "d2", "d5", "d3"])
    assert check_circuit_axioms(M).ok
    assert not check_circuit_axioms(R).ok
    assert check_circuit_axioms(R).ok == check_plucker(coords_from_signature(R)).ok


def test_dual_coordinates_formula():
    M = example_signature()
    cc = coords_from_signature(M)
    D = dual_coords(cc)
    assert D.side == "right"
    assert D.matroid == cc.matroid.dual()
    assert signature_from_coords(D) == dual_matroid(M)


def test_minor_signature_matches_minor_coordinates():
    H = d3()
    M = u24_make(H, "d0", "d3")
    for e in "1234":
        m = minor_signature(M, delete=[e])
        assert coords_from_signature(m).values == minor_coords(coords_from_signature(M), 0, M.matroid.mask([e])).values
        c = minor_signature(M, contract=[e])
        assert coords_from_signature(c).values == minor_coords(coords_from_signature(M), M.matroid.mask([e]), 0).values


def random_u25(H, rng):
    N = Matroid.uniform(2, 5)
    vecs = []
    for c in N.circuits:
        vecs.append(tuple(rng.choice(H.nonzero()) if c >> i & 1 else H.zero for i in range(5)))
    return Signature(H, N.ground, vecs, "left", matroid=N)


def test_minor_locality_on_random_d3_u25():
    H = d3()
    for seed in range(50):
        M = random_u25(H, random.Random(seed))
        assert minor_locality_check(M).ok


def test_minor_locality_on_represented_u25():
    C = represented([[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]], 5)
    assert C.matroid == Matroid.uniform(2, 5)
    assert minor_locality_check(C).ok
    assert check_plucker(coords_from_signature(C)).ok


# -- push-forwards ----------------------------------------------------------------


def test_pushforward_functoriality():
    M = example_signature()
    Hs = M.field
    z = zeta(Hs)
    kz = kappa(z.target)
    assert pushforward(compose(kz, z), M) == pushforward(kz, pushforward(z, M))
    assert pushforward(kappa(Hs), M) == pushforward(kz, pushforward(z, M))


@pytest.mark.parametrize("hom", ["kappa", "zeta"])
def test_pushforward_keeps_matroid_and_axioms(hom):
    M = example_signature()
    f = kappa(M.field) if hom == "kappa" else zeta(M.field)
    P = pushforward(f, M)
    assert P.matroid == M.matroid
    assert check_plucker(coords_from_signature(P)).ok
    assert check_circuit_axioms(P).ok


def test_kappa_pushforward_of_d3():
    H = d3()
    for x, y in d3_instances():
        M = u24_make(H, x, y)
        P = pushforward(kappa(H), M)
        assert P.matroid == M.matroid
        assert check_plucker(coords_from_signature(P)).ok


def test_sign_pushforward():
    C = represented([[1, 0], [0, 1], [1, 1], [1, 2]], 5)
    S = sign()
    table = {0: 0, 1: 1, 2: 1, 3: -1, 4: -1}
    from skewmat.homs import from_table

    f = from_table(C.field, S, table, "sign-ish")
    P = pushforward(f, C)
    assert P.matroid == C.matroid


# -- cross ratios -------------------------------------------------------------------


@pytest.mark.parametrize("p,k", [(2, 2), (3, 1), (3, 2)])
def test_worked_example_cross_ratio_two_routes(p, k):
    cols, a = worked_example(p, k)
    om = ore_matroid(cols)
    Hs = om.monomial_field
    K = om.ring.K
    sigma_a_inv = K.inv(om.ring.sig(a, 1))
    cc = om.mu_coordinates()
    # circuit route
    assert cc[("13", "14")] == Hs.monomial(om.ring.sig(K.inv(a), 1), 1)
    assert cc[("24", "23")] == Hs.monomial(1, -1)
    via_circuits = cross_ratio(om.mu_signature(), (), "1", "2", "3", "4")
    # cocircuit route: [B, B'] = -[E∖B, E∖B'] on the dual coordinates
    dual = coords_from_signature(om.mu_cosignature())
    Hn = Hs.neg
    b1 = Hn(dual[("24", "23")])
    b2 = Hn(dual[("13", "14")])
    via_cocircuits = Hs.mul(b1, b2)
    assert via_circuits == via_cocircuits == Hs.monomial(sigma_a_inv, 0)


def test_cross_ratio_basic_laws_on_represented():
    C = represented([[1, 0], [0, 1], [1, 1], [1, 3]], 5)
    report = cr_properties_check(C)
    for name in ("CR0", "CR1", "CR2", "CR3", "CR4"):
        assert report.passed(name)


def test_cross_ratio_laws_on_a_rank_three_matroid():
    # rank 3 with dependent triples and a parallel pair, so CR1-CR3 all have instances
    C = represented([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 2, 3], [1, 3, 1], [2, 2, 0]], 7)
    report = cr_properties_check(C)
    for name in ("CR0", "CR1", "CR2", "CR3", "CR4"):
        assert report.checks[name].tested > 0
        assert report.passed(name)


def test_stated_crp_fails_over_gf5():
    # a=(1,0), b=(0,1), c=(1,1), d=(1,3) over GF(5): with phi = det,
    # [Fad,Fcd] cr(F,a,b,c,d) = 1/2 while cr(F,c,b,a,d) [Fbd,Fcd] = 1/4
    C = represented([[1, 0], [0, 1], [1, 1], [1, 3]], 5)
    cc = coords_from_signature(C)
    K = C.field
    lhs = K.mul(cc[("14", "34")], cross_ratio(cc, (), "1", "2", "3", "4"))
    rhs = K.mul(cross_ratio(cc, (), "3", "2", "1", "4"), cc[("24", "34")])
    assert lhs == K.inv(2) and rhs == K.inv(4)
    assert not cr_properties_check(C).passed("CRP")


def test_frames_reject_non_bases():
    M = Matroid.from_bases("1234", ["13", "14", "23", "24"])
    K = krasner()
    C = Signature(K, "1234", [(1, 1, 0, 0), (0, 0, 1, 1)], "left")
    assert C.matroid == M
    with pytest.raises(SignatureError):
        cross_ratio(C, (), "1", "3", "2", "4")


def test_signature_requires_field_identity_for_equality():
    K = krasner()
    A = Signature(K, "12", [(1, 1)], "left")
    assert A == Signature(K, "12", [(1, 1)], "left")
    assert A != Signature(K, "12", [(1, 1)], "right")


def test_inconsistent_coordinates_raise():
    K = gf(5)
    N = Matroid.uniform(1, 3)
    values = {(B, B2): 1 for B, B2 in N.adjacent_bases()}
    values[1, 2] = 2
    with pytest.raises(SignatureError):
        signature_from_coords(Coordinates(K, N, values))
