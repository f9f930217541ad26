"""Ordinary matroids on at most 16 elements, stored as a family of basis bitmasks."""

from functools import cached_property
from itertools import combinations

MAX_GROUND = 16


class MatroidError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def popcount(mask):
    return bin(mask).count("1")


def bits(mask):
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def subsets(mask):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class Matroid:
    """A matroid given by its bases.

    ``ground`` is a tuple of string labels; subsets of it are int bitmasks
    where bit i stands for ``ground[i]``.
    """

    def __init__(self, ground, bases, check=True):
        ground = tuple(str(e) for e in ground)
        if len(set(ground)) != len(ground):
            raise MatroidError(f"duplicate labels in {ground}")
        if len(ground) > MAX_GROUND:
            raise MatroidError(f"ground set larger than {MAX_GROUND}")
        self.ground = ground
        self.index = {e: i for i, e in enumerate(ground)}
        self.bases = frozenset(bases)
        if not self.bases:
            raise MatroidError("empty basis family")
        sizes = {popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise MatroidError("bases of different sizes", sorted(sizes))
        self.rank = sizes.pop()
        if check:
            self._check_exchange()
        self._rank_cache = {}

    # -- construction ----------------------------------------------------
    @classmethod
    def from_bases(cls, ground, bases):
        m = cls(ground, [0], check=False)
        return cls(ground, [m.mask(b) for b in bases])

    @classmethod
    def uniform(cls, r, n, labels=None):
        labels = labels or [str(i + 1) for i in range(n)]
        return cls(labels, [sum(1 << i for i in c) for c in combinations(range(n), r)])

    @classmethod
    def from_circuits(cls, ground, circuits, mode="full"):
        tmp = cls(ground, [0], check=False)
        masks = [c if isinstance(c, int) else tmp.mask(c) for c in circuits]
        check_circuit_family(len(tmp.ground), masks, mode, labels=tmp.ground)
        n = len(tmp.ground)
        independent = [s for s in range(1 << n) if not any(c & s == c for c in masks)]
        top = max(popcount(s) for s in independent)
        return cls(tmp.ground, [s for s in independent if popcount(s) == top])

    def _check_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in bits(b1 & ~b2):
                    if not any((b1 & ~(1 << x)) | (1 << y) in self.bases for y in bits(b2 & ~b1)):
                        raise MatroidError(
                            "basis exchange fails", (self.labels(b1), self.labels(b2), self.ground[x])
                        )

    # -- labels --------------------------------------------------------
    @property
    def full(self):
        return (1 << len(self.ground)) - 1

    def mask(self, labels):
        if isinstance(labels, int):
            return labels
        m = 0
        for e in labels:
            try:
                m |= 1 << self.index[str(e)]
            except KeyError:
                raise MatroidError(f"{e!r} is not in the ground set") from None
        return m

    def labels(self, mask):
        return tuple(self.ground[i] for i in bits(mask))

    def fmt(self, mask):
        return "".join(self.labels(mask)) if all(len(e) == 1 for e in self.ground) else " ".join(self.labels(mask))

    # -- rank and independence ------------------------------------------
    def rank_of(self, mask):
        mask = self.mask(mask)
        r = self._rank_cache.get(mask)
        if r is None:
            r = max(popcount(b & mask) for b in self.bases)
            self._rank_cache[mask] = r
        return r

    def is_independent(self, mask):
        mask = self.mask(mask)
        return self.rank_of(mask) == popcount(mask)

    def is_basis(self, mask):
        return self.mask(mask) in self.bases

    def closure(self, mask):
        mask = self.mask(mask)
        r = self.rank_of(mask)
        out = mask
        for i in range(len(self.ground)):
            if not mask >> i & 1 and self.rank_of(mask | 1 << i) == r:
                out |= 1 << i
        return out

    @cached_property
    def circuits(self):
        found = []
        for size in range(1, self.rank + 2):
            for c in combinations(range(len(self.ground)), size):
                m = sum(1 << i for i in c)
                if any(f & m == f for f in found):
                    continue
                if self.rank_of(m) < size:
                    found.append(m)
        return tuple(sorted(found, key=lambda m: (popcount(m), bits(m))))

    @cached_property
    def cocircuits(self):
        return self.dual().circuits

    @cached_property
    def hyperplanes(self):
        return tuple(sorted(self.full & ~c for c in self.cocircuits))

    def fundamental_circuit(self, basis, e):
        """The unique circuit inside basis + e, for e outside the basis."""
        m = basis | 1 << e
        for c in self.circuits:
            if c & m == c:
                return c
        raise MatroidError("no circuit in basis + e")

    def loops(self):
        return [i for i in range(len(self.ground)) if self.rank_of(1 << i) == 0]

    def coloops(self):
        return [i for i in range(len(self.ground)) if all(b >> i & 1 for b in self.bases)]

    # -- derived matroids -------------------------------------------------
    def dual(self):
        return Matroid(self.ground, [self.full & ~b for b in self.bases], check=False)

    def minor(self, contract=(), delete=()):
        """N/contract∖delete on the remaining labels, in ground order."""
        S, T = self.mask(contract), self.mask(delete)
        if S & T:
            raise MatroidError("contracted and deleted sets overlap", self.labels(S & T))
        rs = self.rank_of(S)
        contracted = {b & ~S for b in self.bases if popcount(b & S) == rs}
        best = max(popcount(b & ~T) for b in contracted)
        kept = {b & ~T for b in contracted if popcount(b & ~T) == best}
        rest = [i for i in range(len(self.ground)) if not (S | T) >> i & 1]
        return Matroid(
            [self.ground[i] for i in rest], [_compress(b, rest) for b in kept], check=False
        )

    def restrict_mask(self, mask, rest):
        return _compress(mask, rest)

    def adjacent_bases(self):
        """Ordered pairs (B, B') of bases with |B∖B'| = 1."""
        out = []
        for b in sorted(self.bases):
            for x in bits(b):
                for y in range(len(self.ground)):
                    if b >> y & 1:
                        continue
                    b2 = (b & ~(1 << x)) | (1 << y)
                    if b2 in self.bases:
                        out.append((b, b2))
        return out

    def is_modular_pair(self, c1, c2):
        return is_modular_pair(self.circuits, self.mask(c1), self.mask(c2))

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return hash((self.ground, self.bases))

    def __repr__(self):
        return f"Matroid(rank {self.rank} on {' '.join(self.ground)}, {len(self.bases)} bases)"


def _compress(mask, rest):
    out = 0
    for j, i in enumerate(rest):
        if mask >> i & 1:
            out |= 1 << j
    return out


def is_modular_pair(circuits, c1, c2):
    """C ∪ C' does not properly contain the union of two distinct circuits."""
    if c1 == c2:
        return False
    u = c1 | c2
    inside = [c for c in circuits if c & u == c]
    for a, b in combinations(inside, 2):
        v = a | b
        if v != u:
            return False
    return True


def check_circuit_family(n, circuits, mode="full", labels=None):
    """Validate the circuit axioms, raising MatroidError with a witness.

    ``mode`` selects full elimination or elimination for modular pairs only.
    """
    labels = labels or [str(i) for i in range(n)]

    def show(m):
        return "".join(labels[i] for i in bits(m))

    circuits = list(dict.fromkeys(circuits))
    if 0 in circuits:
        raise MatroidError("(MC0) the empty set is a circuit")
    for a in circuits:
        for b in circuits:
            if a != b and a & b == a:
                raise MatroidError("(MC1) nested circuits", (show(a), show(b)))
    for a, b in combinations(circuits, 2):
        if mode == "modular" and not is_modular_pair(circuits, a, b):
            continue
        for e in bits(a & b):
            room = (a | b) & ~(1 << e)
            if not any(c & room == c for c in circuits):
                name = "(MC2)" if mode == "full" else "(MC2')"
                raise MatroidError(f"{name} elimination fails", (show(a), show(b), labels[e]))


def matroid_from_bases(E, bases):
    return Matroid.from_bases(E, bases)


def matroid_from_circuits(E, circuits, mode="full"):
    return Matroid.from_circuits(E, circuits, mode)


def weak_image_check(N, N2, rank_preserving=False):
    """True iff every dependent set of N is dependent in N2.

    With ``rank_preserving`` the ranks must also agree.
    """
    if N.ground != N2.ground:
        raise MatroidError("weak image needs a common ground set")
    if rank_preserving and N.rank != N2.rank:
        return False
    # independence is hereditary, so testing the bases of N2 suffices
    return all(N.is_independent(b) for b in N2.bases)
