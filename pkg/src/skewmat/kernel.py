"""Linear algebra over K(T, sigma): matroids of Ore vector families.

The primary solver eliminates over left fractions.  The oracle solver writes
each unknown coefficient U_e as a polynomial of bounded degree, expands
sum_e U_e v_e = 0 into linear equations over GF(p), and solves them with
numpy; it shares no code with the fraction arithmetic.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from skewmat.hmatroid import Signature, coords_from_signature, pushforward
from skewmat.matroid import Matroid, bits
from skewmat.ore import (
    OreError,
    OreFraction,
    OrePoly,
    exact_left_quotient,
    exact_right_quotient,
    left_gcd,
    left_lcm_pair,
    mu,
    mu_hom,
    nu,
    right_gcd,
    right_lcm_pair,
)

MAX_ELEMENTS = 8
MAX_DIM = 4


def _frac(x, ring):
    if isinstance(x, OreFraction):
        return x
    if isinstance(x, OrePoly):
        return OreFraction.of(x)
    raise OreError(f"not an Ore polynomial or fraction: {x!r}")


def _pivot_key(x):
    return (nu(x), max(x.num.degree, x.den.degree))


def _right_kernel(rows, n_cols, F, mul):
    """Basis of {y : sum_c rows[r][c] * y_c = 0 for all r} with the given product.

    Passing the reversed product computes left kernels of the transpose.
    Returns (rank, kernel basis).
    """
    A = [list(r) for r in rows]
    zero, one = F.zero, F.one
    pivots = []
    r = 0
    for c in range(n_cols):
        cands = [i for i in range(r, len(A)) if A[i][c] != zero]
        if not cands:
            continue
        p = min(cands, key=lambda i: _pivot_key(A[i][c]))
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        A[r] = [mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != zero:
                f = A[i][c]
                A[i] = [x - mul(f, y) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        y = [zero] * n_cols
        y[f] = one
        for row, c in enumerate(pivots):
            y[c] = -A[row][f]
        basis.append(y)
    return len(pivots), basis


def right_kernel(rows, F):
    n = len(rows[0]) if rows else 0
    return _right_kernel(rows, n, F, F.mul)[1]


def left_kernel(rows, F):
    """Basis of {u : sum_r u_r * rows[r] = 0}."""
    if not rows:
        return []
    n = len(rows[0])
    transpose = [[rows[r][c] for r in range(len(rows))] for c in range(n)]
    return _right_kernel(transpose, len(rows), F, lambda x, y: F.mul(y, x))[1]


def rank(rows, F):
    if not rows:
        return 0
    n = len(rows[0])
    transpose = [[rows[r][c] for r in range(len(rows))] for c in range(n)]
    return _right_kernel(transpose, len(rows), F, lambda x, y: F.mul(y, x))[0]


# -- normal forms ----------------------------------------------------------------


def clear_left(vec, ring):
    """Left-multiply a fraction vector into primitive polynomial form with the
    lowest coefficient of its first nonzero entry equal to 1."""
    dens = [x.den for x in vec if not x.is_zero()]
    if not dens:
        raise OreError("zero vector")
    c = dens[0]
    for a in dens[1:]:
        s, _ = left_lcm_pair(c, a)
        c = s * c
    out = []
    for x in vec:
        if x.is_zero():
            out.append(ring.zero)
        else:
            w = exact_right_quotient(c, x.den)
            out.append(w * x.num)
    return normalize_left(out, ring)


def normalize_left(polys, ring):
    nz = [f for f in polys if not f.is_zero()]
    g = nz[0]
    for f in nz[1:]:
        g = left_gcd(g, f)
    if g.degree > 0:
        polys = [f if f.is_zero() else exact_left_quotient(f, g) for f in polys]
    lead = next(f for f in polys if not f.is_zero())
    lam = ring.K.inv(lead.low)
    return tuple(f.lscale(lam) for f in polys)


def clear_right(vec, ring):
    """Right-multiply a fraction vector into primitive polynomial form, the
    lowest coefficient of its first nonzero entry equal to 1."""
    forms = [x.right_form() if not x.is_zero() else None for x in vec]
    dens = [f[1] for f in forms if f is not None]
    if not dens:
        raise OreError("zero vector")
    c = dens[0]
    for a in dens[1:]:
        u, _ = right_lcm_pair(c, a)
        c = c * u
    out = []
    for f in forms:
        if f is None:
            out.append(ring.zero)
        else:
            b, a = f
            w = exact_left_quotient(c, a)
            out.append(b * w)
    return normalize_right(out, ring)


def normalize_right(polys, ring):
    nz = [f for f in polys if not f.is_zero()]
    g = nz[0]
    for f in nz[1:]:
        g = right_gcd(g, f)
    if g.degree > 0:
        polys = [f if f.is_zero() else exact_right_quotient(f, g) for f in polys]
    lead = next(f for f in polys if not f.is_zero())
    m = lead.valuation
    lam = ring.sig(ring.K.inv(lead.low), -m)
    return tuple(f.rscale(lam) for f in polys)


# -- the matroid of an Ore vector family -----------------------------------------


@dataclass
class OreMatroid:
    ring: object
    labels: tuple
    columns: list
    matroid: Matroid
    circuits: dict = field(default_factory=dict)
    cocircuits: dict = field(default_factory=dict)

    @property
    def fraction_field(self):
        return self.ring.fraction_field()

    @property
    def monomial_field(self):
        return self.ring.monomial_field()

    def signature(self):
        F = self.fraction_field
        vecs = [tuple(OreFraction.of(f) for f in U) for U in self.circuits.values()]
        return Signature(F, self.labels, vecs, "left", matroid=self.matroid)

    def cosignature(self):
        F = self.fraction_field
        vecs = [tuple(OreFraction.of(f) for f in V) for V in self.cocircuits.values()]
        return Signature(F, self.labels, vecs, "right", matroid=self.matroid.dual())

    def mu_signature(self):
        M = self.monomial_field
        vecs = [tuple(mu(f) for f in U) for U in self.circuits.values()]
        return Signature(M, self.labels, vecs, "left", matroid=self.matroid)

    def mu_cosignature(self):
        M = self.monomial_field
        vecs = [tuple(mu(f) for f in V) for V in self.cocircuits.values()]
        return Signature(M, self.labels, vecs, "right", matroid=self.matroid.dual())

    def circuit(self, labels):
        return self.circuits[self.matroid.mask(labels)]

    def cocircuit(self, labels):
        return self.cocircuits[self.matroid.mask(labels)]

    def mu_coordinates(self):
        return coords_from_signature(self.mu_signature())

    def pushed(self):
        """mu_* of the fraction-field signature, computed through the homomorphism."""
        return pushforward(mu_hom(self.ring), self.signature())


def _validate(columns, labels):
    if not columns:
        raise OreError("empty vector family")
    d = len(columns[0])
    if d == 0:
        raise OreError("vectors of dimension 0")
    if any(len(c) != d for c in columns):
        raise OreError("vectors of different dimensions")
    if len(columns) > MAX_ELEMENTS or d > MAX_DIM:
        raise OreError(f"family exceeds {MAX_ELEMENTS} vectors or dimension {MAX_DIM}")
    labels = tuple(str(e) for e in labels) if labels else tuple(str(i + 1) for i in range(len(columns)))
    if len(set(labels)) != len(labels) or len(labels) != len(columns):
        raise OreError("labels must be distinct, one per vector")
    return d, labels


def ore_matroid(columns, labels=None):
    """Left K(T, sigma)-matroid of the vectors v_e (given as columns of length d)."""
    d, labels = _validate(columns, labels)
    ring = columns[0][0].ring
    F = ring.fraction_field()
    rows = [[_frac(x, ring) for x in col] for col in columns]
    n = len(rows)
    r = rank(rows, F)
    bases = [sum(1 << i for i in S) for S in combinations(range(n), r) if rank([rows[i] for i in S], F) == r]
    N = Matroid(labels, bases, check=False)
    circuits = {}
    for C in N.circuits:
        idx = bits(C)
        (u,) = left_kernel([rows[i] for i in idx], F)
        full = [F.zero] * n
        for i, x in zip(idx, u):
            full[i] = x
        circuits[C] = clear_left(full, ring)
    cocircuits = {}
    for D in N.cocircuits:
        hyper = [i for i in range(n) if not D >> i & 1]
        ker = right_kernel([rows[i] for i in hyper], F) if hyper else _identity(d, F)
        for y in ker:
            V = [_dot(rows[e], y, F) for e in range(n)]
            if any(not V[e].is_zero() for e in bits(D)):
                cocircuits[D] = clear_right(V, ring)
                break
    return OreMatroid(ring, labels, [list(c) for c in columns], N, circuits, cocircuits)


def _identity(d, F):
    return [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]


def _dot(row, y, F):
    total = F.zero
    for a, b in zip(row, y):
        total = total + F.mul(a, b)
    return total


def check_dependence(om):
    """Every stored circuit U satisfies sum_e U_e v_e = 0 exactly."""
    ring = om.ring
    bad = []
    for C, U in om.circuits.items():
        d = len(om.columns[0])
        for i in range(d):
            total = ring.zero
            for e, f in enumerate(U):
                total = total + f * om.columns[e][i]
            if not total.is_zero():
                bad.append((om.matroid.labels(C), i))
    return bad


# -- the prime-field oracle ---------------------------------------------------


def nullspace_mod_p(M, p):
    """Basis of the right nullspace of an integer matrix over GF(p)."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        others = np.nonzero(A[:, c])[0]
        for i in others:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, c in enumerate(pivots):
            v[c] = -A[row, f] % p
        basis.append(v)
    return basis


def _linearization(ring, columns, D):
    """The GF(p)-matrix of (u_{e,i,t}) -> coefficients of sum_e U_e v_e."""
    K, p, k = ring.K, ring.p, ring.k
    n, d = len(columns), len(columns[0])
    top = D + max((f.degree for col in columns for f in col), default=0)
    width = n * (D + 1) * k
    height = d * (top + 1) * k
    M = np.zeros((height, width), dtype=np.int64)
    gpow = [K.pow(K.generator(), t) if k > 1 else 1 for t in range(k)]
    for e, col in enumerate(columns):
        for comp, f in enumerate(col):
            for j, b in enumerate(f.coeffs):
                if not b:
                    continue
                for i in range(D + 1):
                    c = ring.sig(b, i)
                    for t in range(k):
                        digits = K.digits(K.mul(gpow[t], c))
                        for s, val in enumerate(digits):
                            if val:
                                M[(comp * (top + 1) + i + j) * k + s, (e * (D + 1) + i) * k + t] += val
    return M % p


def _to_polys(ring, vec, n, D):
    K, k = ring.K, ring.k
    out = []
    for e in range(n):
        coeffs = []
        for i in range(D + 1):
            base = (e * (D + 1) + i) * k
            coeffs.append(K.from_digits([int(v) for v in vec[base : base + k]]))
        out.append(OrePoly(ring, coeffs))
    return out


def degree_bound(columns):
    delta = max((f.degree for col in columns for f in col), default=0)
    return (len(columns) - 1) * max(delta, 0) + 2


def oracle_dependence(columns, bound=None):
    """A minimal-degree left dependence of the columns, or None if none exists
    within the degree bound."""
    ring = columns[0][0].ring
    bound = degree_bound(columns) if bound is None else bound
    for D in range(bound + 1):
        ker = nullspace_mod_p(_linearization(ring, columns, D), ring.p)
        if ker:
            return _to_polys(ring, ker[0], len(columns), D)
    return None


def oracle_circuits(columns):
    """Minimal dependent subsets and their normalized dependences, by brute force."""
    ring = columns[0][0].ring
    n, d = len(columns), len(columns[0])
    found = {}
    for size in range(1, min(n, d + 1) + 1):
        for S in combinations(range(n), size):
            m = sum(1 << i for i in S)
            if any(c & m == c for c in found):
                continue
            U = oracle_dependence([columns[i] for i in S])
            if U is None:
                continue
            full = [ring.zero] * n
            for i, f in zip(S, U):
                full[i] = f
            found[m] = normalize_left(full, ring)
    return found


# -- quasi-determinants ---------------------------------------------------------


def _as_fractions(A, F):
    return [[x if isinstance(x, type(F.zero)) else OreFraction.of(x) for x in row] for row in A]


def column_signature(columns, F, labels):
    """Right signature of column vectors: sum_e v_e X_e = 0 over minimal supports."""
    n = len(columns)
    d = len(columns[0])
    rows_of = lambda idx: [[columns[e][i] for e in idx] for i in range(d)]  # noqa: E731
    r = n - len(right_kernel(rows_of(range(n)), F))
    bases = []
    for S in combinations(range(n), r):
        if len(right_kernel(rows_of(S), F)) == 0:
            bases.append(sum(1 << i for i in S))
    N = Matroid(labels, bases, check=False)
    vectors = []
    for C in N.circuits:
        idx = bits(C)
        (x,) = right_kernel(rows_of(idx), F)
        full = [F.zero] * n
        for i, v in zip(idx, x):
            full[i] = v
        vectors.append(tuple(full))
    return Signature(F, labels, vectors, "right", matroid=N)


def quasi_det(A, i, j, F):
    """|A|_ij as the right-matroid coordinate [J, J - j + i] of [I | A]."""
    A = _as_fractions(A, F)
    n = len(A)
    if any(len(row) != n for row in A):
        raise OreError("quasi-determinants need a square matrix")
    if rank(A, F) < n:
        raise OreError("matrix is singular")
    labels = [f"i{r + 1}" for r in range(n)] + [f"j{c + 1}" for c in range(n)]
    columns = [[F.one if r == c else F.zero for r in range(n)] for c in range(n)]
    columns += [[A[r][c] for r in range(n)] for c in range(n)]
    sig = column_signature(columns, F, labels)
    cc = coords_from_signature(sig)
    J = sum(1 << (n + c) for c in range(n))
    return cc.values[J, (J & ~(1 << (n + j))) | 1 << i]


def inverse(A, F):
    """Gauss-Jordan inverse; raises on a singular matrix."""
    A = _as_fractions(A, F)
    n = len(A)
    M = [list(row) + [F.one if r == c else F.zero for c in range(n)] for r, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != F.zero), None)
        if piv is None:
            raise OreError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = F.inv(M[c][c])
        M[c] = [F.mul(inv, x) for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != F.zero:
                f = M[r][c]
                M[r] = [x - F.mul(f, y) for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def quasi_det_by_inverse(A, i, j, F):
    """|A|_ij = (b_ji)^-1 for B the inverse of A."""
    B = inverse(A, F)
    b = B[j][i]
    if b == F.zero:
        raise OreError(f"quasi-determinant |A|_{i}{j} is undefined")
    return F.inv(b)


# -- the worked example ------------------------------------------------------------


def worked_example(p=2, k=2, a=None):
    """v1 = (1, 0), v2 = (0, T^3), v3 = (T^2 + T, T^2), v4 = (1, T^4 + aT)."""
    from skewmat.ore import ore_ring

    R = ore_ring(p, k, "frob")
    if a is None:
        a = R.K.generator()
    if isinstance(a, str):
        a = R.K.parse(a)
    if a == 0:
        raise OreError("a must be nonzero")
    T = R.T
    one, zero = R.one, R.zero
    cols = [
        [one, zero],
        [zero, R.monomial(1, 3)],
        [R.monomial(1, 2) + T, R.monomial(1, 2)],
        [one, R.monomial(1, 4) + R.monomial(a, 1)],
    ]
    return cols, a
