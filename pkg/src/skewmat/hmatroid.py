"""Matroids over skew hyperfields.

A left signature is a family of circuit vectors closed under left scaling; a
right signature uses right scaling.  Both are stored with one canonical
representative per support: the entry at the least support element is 1.

Quasi-Plücker coordinates live on ordered pairs of adjacent bases (B, B')
stored as bitmask pairs.  For right-sided objects every product in the axioms
is taken in reversed order.
"""

from functools import cached_property
from itertools import combinations, permutations, product

from skewmat.hyperfield import HyperfieldError
from skewmat.matroid import Matroid, MatroidError, bits, is_modular_pair, popcount
from skewmat.report import Report


class SignatureError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _flip(side):
    return "right" if side == "left" else "left"


def scale(H, vec, alpha, side):
    """alpha*X for left objects, X*alpha for right ones."""
    if side == "left":
        return tuple(H.mul(alpha, x) for x in vec)
    return tuple(H.mul(x, alpha) for x in vec)


def support(H, vec):
    m = 0
    for i, x in enumerate(vec):
        if x != H.zero:
            m |= 1 << i
    return m


def normalize(H, vec, side):
    for x in vec:
        if x != H.zero:
            return scale(H, vec, H.inv(x), side)
    return tuple(vec)


class Signature:
    """Circuit vectors of a left or right H-matroid, one per support."""

    def __init__(self, field, ground, vectors, side="left", matroid=None):
        if side not in ("left", "right"):
            raise SignatureError(f"side must be left or right, not {side!r}")
        self.field = field
        self.ground = tuple(str(e) for e in ground)
        self.side = side
        n = len(self.ground)
        normed = set()
        for v in vectors:
            v = tuple(v)
            if len(v) != n:
                raise SignatureError(f"vector of length {len(v)} on a ground set of size {n}")
            normed.add(normalize(field, v, side))
        self.vectors = tuple(sorted(normed, key=lambda v: (bits(support(field, v)), repr(v))))
        self._matroid = matroid

    @cached_property
    def supports(self):
        return [support(self.field, v) for v in self.vectors]

    @cached_property
    def by_support(self):
        out = {}
        for s, v in zip(self.supports, self.vectors):
            out.setdefault(s, []).append(v)
        return out

    @property
    def matroid(self):
        if self._matroid is None:
            self._matroid = Matroid.from_circuits(self.ground, sorted(set(self.supports)))
        return self._matroid

    def vector(self, circuit):
        found = self.by_support.get(circuit)
        if not found:
            raise SignatureError("no vector for circuit", self.matroid.labels(circuit))
        if len(found) > 1:
            raise SignatureError("two non-proportional vectors share a support (C2)", found[:2])
        return found[0]

    def format_vector(self, v):
        return "(" + ", ".join(self.field.format(x) for x in v) + ")"

    def __eq__(self, other):
        return (
            isinstance(other, Signature)
            and self.field is other.field
            and self.side == other.side
            and self.ground == other.ground
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.side, self.ground, self.vectors))

    def __repr__(self):
        body = "; ".join(self.format_vector(v) for v in self.vectors)
        return f"Signature({self.side}, {self.field.spec}, {body})"


class Coordinates:
    """Quasi-Plücker coordinates: a map from adjacent basis pairs to H*."""

    def __init__(self, field, matroid, values, side="left"):
        self.field = field
        self.matroid = matroid
        self.values = dict(values)
        self.side = side

    def __getitem__(self, pair):
        B, B2 = pair
        N = self.matroid
        return self.values[N.mask(B), N.mask(B2)]

    def prod(self, *xs):
        return self.field.product(xs, self.side)

    def __eq__(self, other):
        return (
            isinstance(other, Coordinates)
            and self.side == other.side
            and self.matroid == other.matroid
            and self.values == other.values
        )

    def lines(self):
        N, H = self.matroid, self.field
        out = []
        for (B, B2), v in sorted(self.values.items(), key=lambda kv: (bits(kv[0][0]), bits(kv[0][1]))):
            out.append(f"{' '.join(N.labels(B))} -> {' '.join(N.labels(B2))} : {H.format(v)}")
        return out

    def __repr__(self):
        return f"Coordinates({self.side}, {self.field.spec}, {len(self.values)} pairs)"


def _single(mask):
    return bits(mask)[0]


def coords_from_signature(C):
    """[Fa, Fb] = -X_a^-1 X_b (left) or -X_b X_a^-1 (right) for the circuit X in Fab."""
    N, H = C.matroid, C.field
    values = {}
    fundamental = {}
    for B, B2 in N.adjacent_bases():
        a, b = _single(B & ~B2), _single(B2 & ~B)
        key = (B, b)
        if key not in fundamental:
            fundamental[key] = N.fundamental_circuit(B, b)
        X = C.vector(fundamental[key])
        xa_inv = H.inv(X[a])
        if C.side == "left":
            values[B, B2] = H.neg(H.mul(xa_inv, X[b]))
        else:
            values[B, B2] = H.neg(H.mul(X[b], xa_inv))
    return Coordinates(H, N, values, C.side)


def signature_from_coords(cc, verify=True):
    """Rebuild the circuits: X_c = 1 and X_a = -[B - a + c, B] with B ⊇ C - c a basis.

    With ``verify`` the circuits are mapped back to coordinates and compared.
    """
    N, H = cc.matroid, cc.field
    n = len(N.ground)
    bases = sorted(N.bases, key=bits)
    vectors = []
    for C in N.circuits:
        els = bits(C)
        c = els[0]
        rest = C & ~(1 << c)
        B = next(b for b in bases if b & rest == rest)
        X = [H.zero] * n
        X[c] = H.one
        for a in els[1:]:
            X[a] = H.neg(cc.values[(B & ~(1 << a)) | 1 << c, B])
        vectors.append(tuple(X))
    sig = Signature(H, N.ground, vectors, cc.side, matroid=N)
    if not verify:
        return sig
    back = coords_from_signature(sig)
    if back.values != cc.values:
        pair = next(p for p in cc.values if back.values.get(p) != cc.values[p])
        raise SignatureError(
            "coordinates admit no consistent circuit vectors",
            (N.labels(pair[0]), N.labels(pair[1])),
        )
    return sig


# -- axiom checks ---------------------------------------------------------


def _scalings(H, vec, side, distributive):
    if distributive or not H.finite:
        return [vec]
    return [scale(H, vec, alpha, side) for alpha in H.nonzero()]


def check_circuit_axioms(C):
    """(C0) no zero vector, (C2) no comparable supports, the supports form a
    matroid, and (C3) modular elimination."""
    H, side = C.field, C.side
    report = Report(f"circuit axioms ({side}, {H.spec})")
    for name in ("C0", "C1", "C2", "supports are matroid circuits", "C3"):
        report.declare(name)
    labels = lambda m: "".join(C.ground[i] for i in bits(m))  # noqa: E731
    for v, s in zip(C.vectors, C.supports):
        report.record("C0", s != 0, C.format_vector(v))
    # (C1) holds by construction: classes are stored projectively
    report.record("C1", True)
    pairs = list(zip(C.vectors, C.supports))
    for (u, su), (v, sv) in combinations(pairs, 2):
        report.record("C2", not (su & sv == su or su & sv == sv), (C.format_vector(u), C.format_vector(v)))
    supports = sorted(set(C.supports))
    try:
        Matroid.from_circuits(C.ground, supports)
        report.record("supports are matroid circuits", True)
    except MatroidError as exc:
        report.record("supports are matroid circuits", False, (str(exc), exc.witness))

    distributive = H.left_distributive if side == "left" else H.right_distributive
    for (X0, sx), (Y, sy) in permutations(pairs, 2):
        if sx == sy or not is_modular_pair(supports, sx, sy):
            continue
        room_all = sx | sy
        candidates = [(Z, sz) for Z, sz in pairs if sz & room_all == sz]
        only_x = bits(sx & ~sy)
        for e in bits(sx & sy):
            for X in _scalings(H, X0, side, distributive):
                # scale Y so that X_e = -Y_e
                if side == "left":
                    alpha = H.mul(H.neg(X[e]), H.inv(Y[e]))
                else:
                    alpha = H.mul(H.inv(Y[e]), H.neg(X[e]))
                Ys = scale(H, Y, alpha, side)
                ok = any(
                    not sz >> e & 1 and _eliminates(H, side, X, Ys, Z, only_x) for Z, sz in candidates
                )
                witness = {
                    "X": C.format_vector(X),
                    "Y": C.format_vector(Ys),
                    "e": C.ground[e],
                    "modular pair": (labels(sx), labels(sy)),
                }
                report.record("C3", ok, witness)
    return report


def _eliminates(H, side, X, Y, Z, only_x):
    """Is some scalar multiple of Z inside X ⊞ Y entrywise?"""
    f = only_x[0]
    if Z[f] == H.zero:
        return False
    if side == "left":
        beta = H.mul(X[f], H.inv(Z[f]))
    else:
        beta = H.mul(H.inv(Z[f]), X[f])
    Zs = scale(H, Z, beta, side)
    return all(z in H.add(x, y) for x, y, z in zip(X, Y, Zs))


def _frame_sets(N, size):
    """Independent sets of the given size with the elements outside them."""
    n = len(N.ground)
    if size < 0:
        return
    for F in combinations(range(n), size):
        m = sum(1 << i for i in F)
        if N.is_independent(m):
            yield m, [i for i in range(n) if not m >> i & 1]


PLUCKER_AXIOMS = ("P0", "P1", "P2", "P3", "P4")


def check_plucker(cc, axioms=PLUCKER_AXIOMS):
    """Quasi-Plücker axioms (P0)-(P4), every qualifying tuple enumerated."""
    N, H = cc.matroid, cc.field
    v, bases, r = cc.values, N.bases, N.rank
    one, minus_one = H.one, H.neg(H.one)
    prod = cc.prod
    report = Report(f"quasi-Plücker axioms ({cc.side}, {H.spec})")
    for name in axioms:
        report.declare(name)
    lab = N.ground

    def w(F, *xs):
        return ("F=" + "".join(N.labels(F)),) + tuple(lab[x] for x in xs)

    if "P0" in axioms:
        for (B, B2), x in v.items():
            report.record("P0", prod(x, v[B2, B]) == one, (N.labels(B), N.labels(B2)))
    if "P2" in axioms:
        for F, rest in _frame_sets(N, r - 1):
            live = [a for a in rest if F | 1 << a in bases]
            for a, b, c in permutations(live, 3):
                Fa, Fb, Fc = F | 1 << a, F | 1 << b, F | 1 << c
                report.record("P2", prod(v[Fa, Fb], v[Fb, Fc], v[Fc, Fa]) == one, w(F, a, b, c))
    if not {"P1", "P3", "P4"} & set(axioms):
        return report
    for F, rest in _frame_sets(N, r - 2):
        def B(*xs):
            m = F
            for x in xs:
                m |= 1 << x
            return m

        if "P1" in axioms:
            for a, b, c in permutations(rest, 3):
                Fab, Fac, Fbc = B(a, b), B(a, c), B(b, c)
                if Fab in bases and Fac in bases and Fbc in bases:
                    val = prod(v[Fac, Fbc], v[Fab, Fac], v[Fbc, Fab])
                    report.record("P1", val == minus_one, w(F, a, b, c))
        for a, b, c, d in permutations(rest, 4):
            Fac, Fbc, Fad, Fbd = B(a, c), B(b, c), B(a, d), B(b, d)
            if not (Fac in bases and Fbc in bases and Fad in bases and Fbd in bases):
                continue
            Fab, Fcd = B(a, b), B(c, d)
            six = Fab in bases and Fcd in bases
            if "P3" in axioms and not six:
                report.record("P3", v[Fac, Fbc] == v[Fad, Fbd], w(F, a, b, c, d))
            if "P4" in axioms and six:
                s = H.add(prod(v[Fbd, Fab], v[Fac, Fcd]), prod(v[Fad, Fab], v[Fbc, Fcd]))
                report.record("P4", one in s, w(F, a, b, c, d))
    return report


def check_coordinates(cc):
    """(CC0)-(CC2): the axioms every signature's coordinates satisfy."""
    rep = check_plucker(cc, ("P0", "P1", "P3"))
    out = Report(f"coordinate axioms ({cc.side}, {cc.field.spec})")
    out.merge(Report(checks={"CC0": rep.checks["P0"], "CC1": rep.checks["P1"]}))
    # (CC2) only constrains frames where Fab is dependent
    N, v, bases = cc.matroid, cc.values, cc.matroid.bases
    out.declare("CC2")
    for F, rest in _frame_sets(N, N.rank - 2):
        for a, b, c, d in permutations(rest, 4):
            m = lambda x, y: F | 1 << x | 1 << y  # noqa: E731
            if m(a, b) in bases:
                continue
            if all(s in bases for s in (m(a, c), m(b, c), m(a, d), m(b, d))):
                ok = v[m(a, c), m(b, c)] == v[m(a, d), m(b, d)]
                out.record("CC2", ok, ("F=" + "".join(N.labels(F)),) + tuple(N.ground[x] for x in (a, b, c, d)))
    return out


# -- duality and orthogonality ---------------------------------------------


def dual_coords(cc):
    """[B, B']* = -[E∖B, E∖B'] on the dual matroid, with the side flipped."""
    N, H = cc.matroid, cc.field
    full = N.full
    values = {(full & ~B, full & ~B2): H.neg(x) for (B, B2), x in cc.values.items()}
    return Coordinates(H, N.dual(), values, _flip(cc.side))


def orthogonal(H, X, Y):
    """0 ∈ ⊞_e X_e Y_e."""
    terms = [H.mul(x, y) for x, y in zip(X, Y) if x != H.zero and y != H.zero]
    return H.nary_contains(terms, H.zero) if terms else True


def orthogonality_check(C, D, k=3):
    """X ⊥ Y for all X in C (left) and Y in D (right) meeting in at most k elements."""
    H = C.field
    if C.ground != D.ground:
        raise SignatureError("orthogonality needs a common ground set")
    report = Report(f"orthogonality (k={k})")
    report.declare("orthogonality")
    xs_by = {X: _scalings(H, X, "left", H.left_distributive) for X in C.vectors}
    ys_by = {Y: _scalings(H, Y, "right", H.right_distributive) for Y in D.vectors}
    for X, sx in zip(C.vectors, C.supports):
        for Y, sy in zip(D.vectors, D.supports):
            if popcount(sx & sy) > k:
                continue
            for Xs, Ys in product(xs_by[X], ys_by[Y]):
                report.record("orthogonality", orthogonal(H, Xs, Ys), (C.format_vector(Xs), D.format_vector(Ys)))
    try:
        dual_ok = C.matroid.dual() == D.matroid
    except MatroidError:
        dual_ok = False
    report.note(f"underlying matroids are dual: {'yes' if dual_ok else 'no'}")
    return report


def dual_matroid(M):
    """The dual as a signature of the opposite side, built from the dual coordinates."""
    cc = coords_from_signature(M)
    rep = check_plucker(cc)
    if not rep.ok:
        raise SignatureError("not an H-matroid: quasi-Plücker axioms fail", rep.failures()[0])
    return signature_from_coords(dual_coords(cc))


# -- push-forward, minors, rescaling ------------------------------------------


def pushforward(f, M):
    vectors = [tuple(f(x) for x in v) for v in M.vectors]
    return Signature(f.target, M.ground, vectors, M.side, matroid=M.matroid)


def push_coords(f, cc):
    return Coordinates(f.target, cc.matroid, {p: f(x) for p, x in cc.values.items()}, cc.side)


def minor_signature(M, contract=(), delete=()):
    """The signature of N/S∖T: restrictions of circuits avoiding T whose trace
    outside S is a circuit of the minor."""
    N = M.matroid
    S, T = N.mask(contract), N.mask(delete)
    if S & T:
        raise SignatureError("contracted and deleted sets overlap", N.labels(S & T))
    Nm = N.minor(S, T)
    rest = [i for i in range(len(N.ground)) if not (S | T) >> i & 1]
    circuits = set(Nm.circuits)
    vectors = []
    for X, s in zip(M.vectors, M.supports):
        if s & T:
            continue
        if N.restrict_mask(s & ~S, rest) in circuits:
            vectors.append(tuple(X[i] for i in rest))
    return Signature(M.field, Nm.ground, vectors, M.side, matroid=Nm)


def minor_coords(cc, contract, delete):
    """Coordinates of N/S∖T for S independent and T coindependent:
    [Fa, Fb] -> [S ∪ Fa, S ∪ Fb]."""
    N = cc.matroid
    S, T = N.mask(contract), N.mask(delete)
    rest = [i for i in range(len(N.ground)) if not (S | T) >> i & 1]
    kept = [b for b in N.bases if b & S == S and not b & T]
    if not kept:
        raise SignatureError("S is dependent or T is codependent")
    Nm = Matroid([N.ground[i] for i in rest], [N.restrict_mask(b & ~S, rest) for b in kept], check=False)
    values = {}
    for B, B2 in Nm.adjacent_bases():
        up = lambda m: S | sum(1 << rest[j] for j in bits(m))  # noqa: E731
        values[B, B2] = cc.values[up(B), up(B2)]
    return Coordinates(cc.field, Nm, values, cc.side)


def small_minors(N, max_rank=2, max_corank=2):
    """(S, T) with S independent, T coindependent, S ∪ T avoiding some basis
    pattern, and the minor of rank and corank at most the given bounds."""
    n, r = len(N.ground), N.rank
    out = []
    for s_size in range(max(0, r - max_rank), r + 1):
        for S in combinations(range(n), s_size):
            Sm = sum(1 << i for i in S)
            if not N.is_independent(Sm):
                continue
            others = [i for i in range(n) if not Sm >> i & 1]
            for t_size in range(max(0, (n - r) - max_corank), n - r + 1):
                for T in combinations(others, t_size):
                    Tm = sum(1 << i for i in T)
                    if any(b & Sm == Sm and not b & Tm for b in N.bases):
                        out.append((Sm, Tm))
    return out


def minor_locality_check(M):
    """Whole-matroid (P0)-(P4) versus the same axioms on all small minors."""
    cc = M if isinstance(M, Coordinates) else coords_from_signature(M)
    N = cc.matroid
    whole = check_plucker(cc).ok
    local = True
    witness = None
    for S, T in small_minors(N):
        rep = check_plucker(minor_coords(cc, S, T))
        if not rep.ok:
            local = False
            witness = ("/" + "".join(N.labels(S)), "\\" + "".join(N.labels(T)), rep.failures()[0].name)
            break
    report = Report("minor locality")
    report.record("locality equivalence", whole == local, witness)
    report.note(f"whole matroid passes: {whole}; all rank<=2, corank<=2 minors pass: {local}")
    return report


def _inverse_all(H, rho):
    return [H.inv(x) for x in rho]


def rescale_signature(C, rho):
    """C^rho: X_e*rho_e for left signatures, rho_e*Y_e for right ones."""
    H = C.field
    if any(x == H.zero for x in rho):
        raise SignatureError("rescaling needs nonzero entries")
    if C.side == "left":
        vectors = [tuple(H.mul(x, r) for x, r in zip(X, rho)) for X in C.vectors]
    else:
        vectors = [tuple(H.mul(r, x) for x, r in zip(X, rho)) for X in C.vectors]
    return Signature(H, C.ground, vectors, C.side, matroid=C.matroid)


def rescale(M, rho):
    """M^rho: circuits rescaled by rho^-1 (its cocircuits then scale by rho)."""
    H = M.field
    if any(x == H.zero for x in rho):
        raise SignatureError("rescaling needs nonzero entries")
    return rescale_signature(M, _inverse_all(H, rho))


def rescale_coords(cc, rho):
    """rho_a [Fa,Fb] rho_b^-1 (left) or rho_b^-1 [Fa,Fb] rho_a (right)."""
    H = cc.field
    values = {}
    for (B, B2), x in cc.values.items():
        a, b = _single(B & ~B2), _single(B2 & ~B)
        if cc.side == "left":
            values[B, B2] = H.mul(H.mul(rho[a], x), H.inv(rho[b]))
        else:
            values[B, B2] = H.mul(H.mul(H.inv(rho[b]), x), rho[a])
    return Coordinates(H, cc.matroid, values, cc.side)


# -- U_{2,4} ------------------------------------------------------------------


def u24_vectors(H, x, y):
    z, one, neg = H.zero, H.one, H.neg
    return [(z, one, one, one), (one, z, neg(one), neg(x)), (one, one, z, y), (one, x, neg(y), z)]


def u24_make(H, x, y, ground=("1", "2", "3", "4"), check=True):
    """The left signature U_H(x, y) on U_{2,4}."""
    if check and H.one not in H.add(x, y):
        raise SignatureError(f"1 ∉ {H.format(x)} ⊞ {H.format(y)}")
    return Signature(H, ground, u24_vectors(H, x, y), "left", matroid=Matroid.uniform(2, 4, list(ground)))


def _u24_shape(H, C):
    """(x, y) if the normalized vectors of C are exactly those of some U_H(x, y)."""
    by = {s: v for s, v in zip(C.supports, C.vectors)}
    try:
        W, X, Y, Z = by[0b1110], by[0b1101], by[0b1011], by[0b0111]
    except KeyError:
        return None
    if W[2] != H.one or W[3] != H.one or X[2] != H.neg(H.one) or Y[1] != H.one:
        return None
    x, y = H.neg(X[3]), Y[3]
    if Z[1] != x or Z[2] != H.neg(y):
        return None
    return x, y


def u24_classify(M):
    """Rescale a left signature on U_{2,4} into the normal form U_H(x, y)."""
    H = M.field
    if M.side != "left" or M.matroid != Matroid.uniform(2, 4, list(M.ground)):
        raise SignatureError("u24_classify needs a left signature on U_{2,4}")
    by = {s: v for s, v in zip(M.supports, M.vectors)}
    W, Y = by[0b1110], by[0b1011]
    W = scale(H, W, Y[1], "left")
    rho = [H.one, H.inv(W[1]), H.inv(W[2]), H.inv(W[3])]
    shape = _u24_shape(H, rescale_signature(M, rho))
    if shape is None:
        raise SignatureError("signature does not rescale to U_H(x, y); it is not an H-matroid")
    return shape


def u24_solutions(M):
    """All (x, y) with M ~ U_H(x, y) by rescaling (finite H)."""
    H = M.field
    found = set()
    for rho in product(H.nonzero(), repeat=4):
        shape = _u24_shape(H, rescale_signature(M, rho))
        if shape is not None:
            found.add(shape)
    return found


def conjugacy_orbit(H, x, y):
    return {(H.mul(H.mul(b, x), H.inv(b)), H.mul(H.mul(b, y), H.inv(b))) for b in H.nonzero()}


# -- cross ratios ---------------------------------------------------------------


def _coords(M):
    return M if isinstance(M, Coordinates) else coords_from_signature(M)


def is_frame(N, F, a, b, c, d):
    bases = N.bases
    m = lambda x, y: F | 1 << x | 1 << y  # noqa: E731
    if F >> a & 1 or F >> b & 1 or F >> c & 1 or F >> d & 1:
        return False
    return all(s in bases for s in (m(a, c), m(a, d), m(b, d), m(b, c))) and a != b and c != d


def cross_ratio(M, F, a, b, c, d):
    """cr(F,a,b,c,d) = [Fac, Fad][Fbd, Fbc]."""
    cc = _coords(M)
    N = cc.matroid
    F = N.mask(F)
    idx = [N.index[str(e)] if not isinstance(e, int) else e for e in (a, b, c, d)]
    if not is_frame(N, F, *idx):
        raise SignatureError("not a cross-ratio frame", (N.labels(F), a, b, c, d))
    return _cr(cc, F, *idx)


def _cr(cc, F, a, b, c, d):
    v = cc.values
    m = lambda x, y: F | 1 << x | 1 << y  # noqa: E731
    return cc.prod(v[m(a, c), m(a, d)], v[m(b, d), m(b, c)])


def frames(N):
    for F, rest in _frame_sets(N, N.rank - 2):
        for a, b, c, d in permutations(rest, 4):
            if is_frame(N, F, a, b, c, d):
                yield F, a, b, c, d


def cr_properties_check(M):
    """(CR0)-(CR4) and (CRP) over every frame."""
    cc = _coords(M)
    N, H = cc.matroid, cc.field
    one = H.one
    v, bases = cc.values, N.bases
    report = Report(f"cross-ratio properties ({H.spec})")
    for name in ("CR0", "CR1", "CR2", "CR3", "CR4", "CRP"):
        report.declare(name)

    def w(F, *xs):
        return ("F=" + "".join(N.labels(F)),) + tuple(N.ground[x] for x in xs)

    def cr(F, *xs):
        return _cr(cc, F, *xs)

    for F, a, b, c, d in frames(N):
        report.record("CR0", cc.prod(cr(F, a, b, c, d), cr(F, b, a, c, d)) == one, w(F, a, b, c, d))
        if F | 1 << a | 1 << b not in bases or F | 1 << c | 1 << d not in bases:
            report.record("CR3", cr(F, a, b, c, d) == one, w(F, a, b, c, d))
        if is_frame(N, F, b, c, d, a) and is_frame(N, F, a, c, d, b):
            report.record("CR4", one in H.add(cr(F, b, c, d, a), cr(F, a, c, d, b)), w(F, a, b, c, d))
        Fad, Fcd, Fbd = F | 1 << a | 1 << d, F | 1 << c | 1 << d, F | 1 << b | 1 << d
        if Fad in bases and Fcd in bases and Fbd in bases and is_frame(N, F, c, b, a, d):
            lhs = cc.prod(v[Fad, Fcd], cr(F, a, b, c, d))
            rhs = cc.prod(cr(F, c, b, a, d), v[Fbd, Fcd])
            report.record("CRP", lhs == rhs, w(F, a, b, c, d))
    for F, rest in _frame_sets(N, N.rank - 2):
        for a, b, c, d, e in permutations(rest, 5):
            trio = [(a, b, d, e), (b, c, d, e), (c, a, d, e)]
            if all(is_frame(N, F, *t) for t in trio):
                val = cc.prod(*(cr(F, *t) for t in trio))
                report.record("CR1", val == one, w(F, a, b, c, d, e))
    for F, rest in _frame_sets(N, N.rank - 3):
        for a, b, c, d, e in permutations(rest, 5):
            trio = [(F | 1 << a, b, c, d, e), (F | 1 << c, a, b, d, e), (F | 1 << b, c, a, d, e)]
            if all(is_frame(N, *t) for t in trio):
                val = cc.prod(*(cr(*t) for t in trio))
                report.record("CR2", val == one, w(F, a, b, c, d, e))
    return report


# -- weak images ---------------------------------------------------------------


def restrict_coords(cc, N2):
    """The restriction of [.] to the adjacent pairs of a weak image N2."""
    values = {}
    for pair in N2.adjacent_bases():
        if pair not in cc.values:
            raise SignatureError("not a rank-preserving weak image", tuple(map(N2.labels, pair)))
        values[pair] = cc.values[pair]
    return Coordinates(cc.field, N2, values, cc.side)


# -- Grassmann-Plücker functions (commutative H) ---------------------------------


def _perm_sign(seq):
    """+1 or -1 for the permutation that sorts seq (distinct entries)."""
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


class GPFunction:
    """An alternating map E^r -> H determined by its values on sorted bases."""

    def __init__(self, field, matroid, values):
        if not field.commutative:
            raise HyperfieldError("Grassmann-Plücker functions need a commutative hyperfield")
        self.field = field
        self.matroid = matroid
        self.values = dict(values)

    def __call__(self, tup):
        H = self.field
        if len(set(tup)) < len(tup):
            return H.zero
        m = sum(1 << i for i in tup)
        x = self.values.get(m, H.zero)
        if x == H.zero:
            return x
        return x if _perm_sign(tup) == 1 else H.neg(x)

    def __repr__(self):
        N, H = self.matroid, self.field
        body = ", ".join(f"{N.fmt(b)}: {H.format(x)}" for b, x in sorted(self.values.items(), key=lambda kv: bits(kv[0])))
        return f"GPFunction({body})"


def gp_check(phi, N=None):
    N = N or phi.matroid
    H = phi.field
    n, r = len(N.ground), N.rank
    report = Report(f"Grassmann-Plücker axioms ({H.spec})")
    for name in ("GP0", "GP1", "GP2"):
        report.declare(name)
    for t in combinations(range(n), r):
        m = sum(1 << i for i in t)
        report.record("GP0", (phi(t) != H.zero) == (m in N.bases), N.labels(m))
        for perm in permutations(t):
            expected = phi(t) if _perm_sign(perm) == 1 else H.neg(phi(t))
            report.record("GP1", phi(perm) == expected, tuple(N.ground[i] for i in perm))
    for F in combinations(range(n), r - 2) if r >= 2 else []:
        for a, b, c, d in product(range(n), repeat=4):
            f = lambda *xs: phi(F + xs)  # noqa: E731
            terms = [
                H.mul(f(a, b), f(c, d)),
                H.mul(f(a, c), f(d, b)),
                H.mul(f(a, d), f(b, c)),
            ]
            report.record("GP2", H.nary_contains(terms, H.zero), tuple(N.ground[i] for i in F + (a, b, c, d)))
    return report


def gp_to_coords(phi):
    """[F̲a, F̲b] = phi(Fa)/phi(Fb)."""
    N, H = phi.matroid, phi.field
    values = {}
    for B, B2 in N.adjacent_bases():
        F = tuple(bits(B & B2))
        a, b = _single(B & ~B2), _single(B2 & ~B)
        values[B, B2] = H.mul(phi(F + (a,)), H.inv(phi(F + (b,))))
    return Coordinates(H, N, values, "left")


def coords_to_gp(cc):
    """Propagate phi = 1 from the lexicographically least basis along basis
    exchanges, then verify every coordinate and the GP axioms."""
    N, H = cc.matroid, cc.field
    if not H.commutative:
        raise HyperfieldError("Grassmann-Plücker functions need a commutative hyperfield")
    start = min(N.bases, key=bits)
    values = {start: H.one}
    queue = [start]
    neighbours = {}
    for B, B2 in N.adjacent_bases():
        neighbours.setdefault(B, []).append(B2)
    sgn = lambda t: H.one if _perm_sign(t) == 1 else H.neg(H.one)  # noqa: E731
    while queue:
        B = queue.pop(0)
        for B2 in neighbours.get(B, []):
            if B2 in values:
                continue
            F = tuple(bits(B & B2))
            a, b = _single(B2 & ~B), _single(B & ~B2)
            phi_Fb = H.mul(sgn(F + (b,)), values[B])
            phi_Fa = H.mul(cc.values[B2, B], phi_Fb)
            values[B2] = H.mul(sgn(F + (a,)), phi_Fa)
            queue.append(B2)
    phi = GPFunction(H, N, values)
    back = gp_to_coords(phi)
    if back.values != cc.values:
        pair = next(p for p in cc.values if back.values.get(p) != cc.values[p])
        raise SignatureError("coordinates are inconsistent around a cycle", tuple(map(N.labels, pair)))
    return phi
