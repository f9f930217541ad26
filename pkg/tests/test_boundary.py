import random
from itertools import combinations

import pytest

from skewmat.boundary import (
    boundary,
    boundary_report,
    check_flock,
    flock_window,
    perturb_fiber,
    valuation,
    zmin_boundary,
)
from skewmat.hmatroid import SignatureError, coords_from_signature, u24_make
from skewmat.hyperfield import hyperfield_from_spec
from skewmat.kernel import ore_matroid, worked_example
from skewmat.matroid import bits


def det_valuations(cols):
    """Commutative oracle: lowest T-power of det of each 2-subset of columns."""
    out = {}
    for i, j in combinations(range(len(cols)), 2):
        det = cols[i][0] * cols[j][1] - cols[j][0] * cols[i][1]
        if not det.is_zero():
            out[f"{i + 1}{j + 1}"] = det.valuation
    low = min(out.values())
    return {B: v - low for B, v in out.items()}


def named(nu):
    return {nu.matroid.fmt(B): v for B, v in nu.values.items()}


def test_worked_example_valuation():
    cols, _ = worked_example(2, 2)
    om = ore_matroid(cols)
    nu = valuation(om.mu_coordinates())
    assert named(nu) == {"12": 2, "13": 1, "14": 0, "23": 3, "24": 2, "34": 1}


def test_valuation_matches_determinants_when_commutative():
    # GF(3) has trivial Frobenius, so K[T, sigma] is the polynomial ring
    cols, _ = worked_example(3, 1)
    om = ore_matroid(cols)
    assert named(valuation(om.mu_coordinates())) == det_valuations(cols)


def test_random_commutative_valuations():
    from skewmat.ore import ore_ring

    R = ore_ring(3, 1)
    rng = random.Random(2)
    done = 0
    while done < 25:
        cols = [[R.random_poly(rng, 3, density=0.5) for _ in range(2)] for _ in range(4)]
        try:
            om = ore_matroid(cols)
        except Exception:
            continue
        if om.matroid.rank != 2:
            continue
        nu = valuation(om.mu_coordinates())
        assert named(nu) == det_valuations(cols)
        low = {B for B, v in det_valuations(cols).items() if v == 0}
        assert {om.matroid.fmt(B) for B in zmin_boundary(nu).bases} == low
        done += 1


def test_worked_example_boundary():
    cols, _ = worked_example(2, 2)
    om = ore_matroid(cols)
    b = boundary(om.mu_signature())
    assert [b.matroid.fmt(B) for B in b.matroid.bases] == ["14"]
    assert boundary_report(om.mu_signature()).ok


def random_ore_families(count, seed):
    from skewmat.ore import ore_ring

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        R = ore_ring(*rng.choice([(2, 2), (3, 2), (2, 3)]))
        d = rng.randint(2, 3)
        cols = [[R.random_poly(rng, 3, density=0.5) for _ in range(d)] for _ in range(rng.randint(d + 1, 5))]
        om = ore_matroid(cols)
        if om.matroid.rank >= 2:
            out.append(om)
    return out


def test_boundary_is_rank_preserving_weak_image_over_base():
    for om in random_ore_families(20, seed=4):
        report = boundary_report(om.mu_signature())
        assert report.ok, report.lines()


def test_zmin_boundary_of_pushforward():
    # the Zmin push of a monomial matroid has the same boundary matroid
    from skewmat.hmatroid import pushforward
    from skewmat.homs import zeta

    for om in random_ore_families(10, seed=6):
        ms = om.mu_signature()
        zs = pushforward(zeta(ms.field), ms)
        assert zmin_boundary(zs).bases == boundary(ms).matroid.bases


def test_valuation_needs_levels():
    H = hyperfield_from_spec("krasner")
    M = u24_make(H, 1, 1)
    with pytest.raises(SignatureError):
        valuation(coords_from_signature(M))


# -- flocks -----------------------------------------------------------------------


@pytest.fixture(scope="module")
def example_flock():
    cols, _ = worked_example(2, 2)
    return flock_window(ore_matroid(cols).mu_signature(), 1)


def test_flock_window_one_passes(example_flock):
    assert len(example_flock.fibers) == 81
    report = check_flock(example_flock)
    assert report.ok, report.lines()


def test_flock_perturbation_is_caught(example_flock):
    bent, alpha = perturb_fiber(example_flock)
    report = check_flock(bent)
    assert not report.ok
    failing = [c.name for c in report.failures()]
    assert "F1" in failing or "F2" in failing


def test_flock_shift_squares_coordinates(example_flock):
    # over GF(4) sigma is squaring, so F_(alpha+1) has squared coordinates
    K = example_flock.source.field.base
    seen_nontrivial = False
    for alpha in example_flock.points():
        up = tuple(a + 1 for a in alpha)
        if up not in example_flock.fibers:
            continue
        low_cc = coords_from_signature(example_flock[alpha])
        up_cc = coords_from_signature(example_flock[up])
        for key, x in low_cc.values.items():
            assert up_cc.values[key] == K.mul(x, x)
            seen_nontrivial |= x not in (0, 1) and K.mul(x, x) != x
    assert seen_nontrivial


def test_flock_fibers_have_constant_rank(example_flock):
    assert {f.matroid.rank for f in example_flock.fibers.values()} == {2}
    assert all(len(bits(B)) == 2 for f in example_flock.fibers.values() for B in f.matroid.bases)
