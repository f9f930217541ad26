"""Hyperfield homomorphisms: kappa, zeta, tau, powers of an automorphism, tables."""

import random
from itertools import product

from skewmat.hyperfield import INF, HyperfieldError, LevelSet, krasner, zmin
from skewmat.report import Report


class Homomorphism:
    def __init__(self, name, source, target, func):
        self.name = name
        self.source = source
        self.target = target
        self.func = func

    def __call__(self, x):
        return self.func(x)

    def image(self, S, window=3):
        """Images of the members of a hypersum (level-windowed when infinite)."""
        if isinstance(S, LevelSet) and not S.is_finite:
            members = S.members(-window, window)
        else:
            members = S
        return {self.func(s) for s in members}

    def __repr__(self):
        return f"Homomorphism({self.name}: {self.source.spec} -> {self.target.spec})"


def kappa(H):
    """Every nonzero element goes to 1 in the Krasner hyperfield."""
    K = krasner()
    return Homomorphism("kappa", H, K, lambda x: 0 if x == H.zero else 1)


def zeta(M):
    """The level map a*T^i -> i from a leveled hyperfield to Zmin."""
    return Homomorphism("zeta", M, zmin(), lambda x: INF if x == M.zero else M.level(x))


def tau(M):
    """i -> T^i from Zmin; a homomorphism when 1 lies in 1⊞1 in the base."""
    B = M.base
    if B.one not in B.add(B.one, B.one):
        raise HyperfieldError(f"tau needs 1 ∈ 1⊞1 in {B.spec}")
    return Homomorphism("tau", zmin(), M, lambda i: M.zero if i == INF else M.join(B.one, i))


def sigma_power(H, sigma, n=1):
    f = sigma.power(n)
    return Homomorphism(f"{sigma.name}^{n}", H, H, f)


def from_table(source, target, table, name="table"):
    table = dict(table)
    return Homomorphism(name, source, target, table.__getitem__)


def compose(g, f):
    """g after f."""
    return Homomorphism(f"{g.name}∘{f.name}", f.source, g.target, lambda x: g(f(x)))


def hom_apply(f, x):
    if not f.source.contains(x):
        raise HyperfieldError(f"{x!r} is not in {f.source.spec}")
    return f(x)


def hom_check(f, budget=100_000, window=2, samples=None, seed=0):
    """Check f(0)=0, f(1)=1, multiplicativity and f(x⊞y) ⊆ f(x)⊞f(y)."""
    S, T = f.source, f.target
    els = list(samples) if samples is not None else S.sample_elements(window)
    report = Report(f"homomorphism {f.name}")
    report.record("f(0) = 0", f(S.zero) == T.zero, None)
    report.record("f(1) = 1", f(S.one) == T.one, None)
    pairs = list(product(els, repeat=2))
    if len(pairs) > budget:
        pairs = random.Random(seed).sample(pairs, budget)
    for x, y in pairs:
        fx, fy = f(x), f(y)
        w = (S.format(x), S.format(y))
        report.record("multiplicative", f(S.mul(x, y)) == T.mul(fx, fy), w)
        target = T.add(fx, fy)
        ok = all(v in target for v in f.image(S.add(x, y), window + 2))
        report.record("f(x⊞y) ⊆ f(x)⊞f(y)", ok, w)
    return report
