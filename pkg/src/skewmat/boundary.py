"""Boundary matroids of Zmin- and monomial-hyperfield matroids, and flocks."""

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from skewmat.hmatroid import (
    Coordinates,
    Signature,
    SignatureError,
    check_plucker,
    coords_from_signature,
    minor_signature,
    pushforward,
    rescale,
    signature_from_coords,
)
from skewmat.homs import sigma_power
from skewmat.hyperfield import INF, Leveled
from skewmat.matroid import Matroid, MatroidError, bits, weak_image_check
from skewmat.report import Report


@dataclass
class Valuation:
    matroid: Matroid
    values: dict

    def __getitem__(self, B):
        return self.values[self.matroid.mask(B)]

    def minimizers(self):
        low = min(self.values.values())
        return [B for B, v in self.values.items() if v == low]

    def shifted(self, c):
        return Valuation(self.matroid, {B: v + c for B, v in self.values.items()})


def _level(H, x):
    if x == H.zero:
        return INF
    return H.level(x)


def valuation(cc):
    """nu on bases with nu(B) - nu(B') = level of [B, B'], normalized to min 0.

    Values are propagated from the lexicographically least basis; every
    adjacent pair is then re-checked so disagreement around a cycle raises.
    """
    H, N = cc.field, cc.matroid
    if not isinstance(H, Leveled):
        raise SignatureError(f"{H.spec} carries no levels")
    start = min(N.bases, key=bits)
    nu = {start: 0}
    neighbours = {}
    for B, B2 in N.adjacent_bases():
        neighbours.setdefault(B, []).append(B2)
    queue = deque([start])
    while queue:
        B = queue.popleft()
        for B2 in neighbours.get(B, []):
            if B2 not in nu:
                nu[B2] = nu[B] - _level(H, cc.values[B, B2])
                queue.append(B2)
    for (B, B2), x in cc.values.items():
        if nu[B] - nu[B2] != _level(H, x):
            raise SignatureError(
                "level differences disagree around a cycle", (N.labels(B), N.labels(B2))
            )
    low = min(nu.values())
    return Valuation(N, {B: v - low for B, v in nu.items()})


def zmin_boundary(M):
    """The matroid of minimum-valuation bases (exchange is re-checked)."""
    if isinstance(M, Valuation):
        nu = M
    else:
        nu = valuation(M if isinstance(M, Coordinates) else coords_from_signature(M))
    N = nu.matroid
    try:
        return Matroid(N.ground, nu.minimizers(), check=True)
    except MatroidError as exc:
        raise SignatureError(f"minimizers do not form a matroid: {exc}", exc.witness) from exc


@dataclass
class Boundary:
    signature: Signature
    coordinates: Coordinates
    valuation: Valuation

    @property
    def matroid(self):
        return self.coordinates.matroid


def boundary(M):
    """Boundary matroid of a left monomial-hyperfield matroid, with its coordinates over the base."""
    cc = M if isinstance(M, Coordinates) else coords_from_signature(M)
    Hs = cc.field
    nu = valuation(cc)
    N = zmin_boundary(nu)
    base = Hs.base
    values = {}
    for B, B2 in N.adjacent_bases():
        x = cc.values[B, B2]
        if Hs.level(x) != 0:
            raise SignatureError("boundary coordinate off level 0", (N.labels(B), N.labels(B2)))
        values[B, B2] = Hs.coefficient(x)
    coords = Coordinates(base, N, values, cc.side)
    return Boundary(signature_from_coords(coords), coords, nu)


def boundary_matroid(M):
    return boundary(M).signature


def boundary_report(M):
    """Weak image with equal rank, and the quasi-Plücker axioms over the base."""
    cc = M if isinstance(M, Coordinates) else coords_from_signature(M)
    b = boundary(cc)
    report = Report(f"boundary matroid over {b.coordinates.field.spec}")
    report.record("rank-preserving weak image", weak_image_check(cc.matroid, b.matroid, rank_preserving=True))
    report.merge(check_plucker(b.coordinates), prefix="boundary ")
    return report


# -- flocks ---------------------------------------------------------------------


def tau_vector(Hs, alpha):
    """e -> T^alpha_e."""
    return [Hs.join(Hs.base.one, a) for a in alpha]


@dataclass
class Flock:
    source: Signature
    window: tuple
    fibers: dict = field(default_factory=dict)

    @property
    def ground(self):
        return self.source.ground

    def points(self):
        return sorted(self.fibers)

    def __getitem__(self, alpha):
        return self.fibers[tuple(alpha)]

    def lines(self):
        out = []
        for alpha in self.points():
            fiber = self.fibers[alpha]
            N = fiber.matroid
            out.append("alpha: " + ",".join(str(a) for a in alpha))
            out.append("bases: " + " ".join(N.fmt(B) for B in sorted(N.bases, key=bits)))
            out.extend(coords_from_signature(fiber).lines())
        return out


def flock_window(M, window=2):
    """alpha -> boundary of M^{tau(alpha)} for alpha in a box.

    ``window`` is an int w (the box [-w, w]^E) or an explicit list of ranges.
    """
    Hs = M.field
    n = len(M.ground)
    ranges = [range(-window, window + 1)] * n if isinstance(window, int) else [range(lo, hi + 1) for lo, hi in window]
    box = tuple((r.start, r.stop - 1) for r in ranges)
    flock = Flock(M, box)
    for alpha in product(*ranges):
        flock.fibers[alpha] = boundary_matroid(rescale(M, tau_vector(Hs, alpha)))
    return flock


def _unit(n, e):
    return tuple(1 if i == e else 0 for i in range(n))


def _shift(alpha, delta):
    return tuple(a + d for a, d in zip(alpha, delta))


def check_flock(F):
    """(F1), (F2) on signatures and (MF1), (MF2) on the underlying matroids,
    at every comparison inside the window.

    (F1) and (MF1) are checked as F_alpha∖e = F_(alpha+1_e)/e, the orientation
    that boundaries of rescalings satisfy; the mirrored equation is counted in
    an INFO line.
    """
    Hs = F.source.field
    sigma = sigma_power(Hs.base, Hs.sigma, 1)
    n = len(F.ground)
    ones = (1,) * n
    report = Report("flock axioms")
    for name in ("rank constant", "F1", "F2", "MF1", "MF2"):
        report.declare(name)
    ranks = {fiber.matroid.rank for fiber in F.fibers.values()}
    report.record("rank constant", len(ranks) == 1, sorted(ranks))
    mirrored = [0, 0]
    for alpha, fiber in F.fibers.items():
        for e in range(n):
            up = _shift(alpha, _unit(n, e))
            if up not in F.fibers:
                continue
            label = F.ground[e]
            upper = F.fibers[up]
            witness = {"alpha": alpha, "e": label}
            ok = minor_signature(fiber, delete=[label]) == minor_signature(upper, contract=[label])
            report.record("F1", ok, witness)
            N, N2 = fiber.matroid, upper.matroid
            report.record("MF1", N.minor(delete=[label]) == N2.minor(contract=[label]), witness)
            mirrored[0] += 1
            mirrored[1] += minor_signature(upper, delete=[label]) != minor_signature(fiber, contract=[label])
        up = _shift(alpha, ones)
        if up in F.fibers:
            pushed = pushforward(sigma, fiber)
            report.record("F2", F.fibers[up] == pushed, {"alpha": alpha})
            report.record("MF2", F.fibers[up].matroid == fiber.matroid, {"alpha": alpha})
    report.note(f"{len(F.fibers)} fibers on the box {F.window}")
    report.note(f"mirrored F_(a+1_e)∖e = F_a/e fails at {mirrored[1]}/{mirrored[0]} comparisons")
    return report


def perturb_fiber(F, alpha=None, factor=None):
    """A copy of F with one circuit entry of one fiber multiplied by ``factor``."""
    H = F.source.field.base
    points = [tuple(alpha)] if alpha is not None else F.points()
    for a in points:
        fiber = F.fibers[a]
        for X, s in zip(fiber.vectors, fiber.supports):
            if len(bits(s)) < 2:
                continue
            b = bits(s)[-1]
            c = factor if factor is not None else next(x for x in H.nonzero() if x != H.one)
            Y = list(X)
            Y[b] = H.mul(Y[b], c)
            others = [V for V in fiber.vectors if V != X]
            bent = Signature(H, fiber.ground, others + [tuple(Y)], fiber.side, matroid=fiber.matroid)
            out = Flock(F.source, F.window, dict(F.fibers))
            out.fibers[a] = bent
            return out, a
    raise SignatureError("no fiber has a circuit with two or more elements")
