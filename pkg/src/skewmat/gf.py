"""Finite fields GF(p^k) for p^k <= 256, using log/antilog tables.

An element is an integer whose base-p digits are its coefficients in the
basis 1, g, g^2, ... where g is a root of the field's modulus. Every modulus
is a Conway polynomial, so g generates the multiplicative group.
"""

import re
from functools import lru_cache

from skewmat.hyperfield import Automorphism, Hyperfield, HyperfieldError

MAX_ORDER = 256

# Conway polynomials, coefficients from the constant term up (monic).
CONWAY = {
    (2, 1): [1, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (2, 5): [1, 0, 1, 0, 0, 1],
    (2, 6): [1, 1, 0, 1, 1, 0, 1],
    (2, 7): [1, 1, 0, 0, 0, 0, 0, 1],
    (2, 8): [1, 0, 1, 1, 1, 0, 0, 0, 1],
    (3, 2): [2, 2, 1],
    (3, 3): [1, 2, 0, 1],
    (3, 4): [2, 0, 0, 2, 1],
    (3, 5): [1, 2, 0, 0, 0, 1],
    (5, 2): [2, 4, 1],
    (5, 3): [3, 3, 0, 1],
    (7, 2): [3, 6, 1],
    (11, 2): [2, 7, 1],
    (13, 2): [2, 12, 1],
}


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _least_primitive_root(p):
    for a in range(1, p):
        x, order = a, 1
        while x != 1:
            x = x * a % p
            order += 1
        if order == p - 1:
            return a
    raise HyperfieldError(f"no primitive root mod {p}")


def conway_polynomial(p, k):
    if k == 1:
        return [(-_least_primitive_root(p)) % p, 1]
    try:
        return list(CONWAY[p, k])
    except KeyError:
        raise HyperfieldError(f"no modulus on record for GF({p}^{k})") from None


class GF(Hyperfield):
    """The finite field of order p^k, viewed also as a hyperfield with singleton sums."""

    def __init__(self, p, k):
        if not is_prime(p):
            raise HyperfieldError(f"{p} is not prime")
        if k < 1 or p**k > MAX_ORDER:
            raise HyperfieldError(f"GF({p}^{k}) exceeds the table bound {MAX_ORDER}")
        self.p, self.k, self.q = p, k, p**k
        self.spec = f"gf:{p}:{k}"
        self.modulus = conway_polynomial(p, k)
        self.zero, self.one = 0, 1
        self._build_tables()

    # -- tables ----------------------------------------------------------
    def digits(self, x):
        """Coefficients of x in the basis 1, g, ..., g^(k-1)."""
        return self._digits(x)

    def from_digits(self, digits):
        return self._number(digits)

    def _digits(self, x):
        out = []
        for _ in range(self.k):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def _number(self, digits):
        x = 0
        for d in reversed(digits):
            x = x * self.p + d % self.p
        return x

    def _times_g(self, x):
        p, k = self.p, self.k
        d = [0] + self._digits(x)
        top = d.pop()
        return self._number([(d[i] - top * self.modulus[i]) % p for i in range(k)])

    def _build_tables(self):
        q = self.q
        exp = [0] * (2 * q)
        log = [None] * q
        x = 1
        for n in range(q - 1):
            if log[x] is not None:
                raise HyperfieldError(f"modulus of GF({self.p}^{self.k}) is not primitive")
            exp[n] = x
            log[x] = n
            x = self._times_g(x)
        if x != 1:
            raise HyperfieldError(f"modulus of GF({self.p}^{self.k}) is not primitive")
        for n in range(q - 1, 2 * q):
            exp[n] = exp[n - (q - 1)]
        self.exp, self.log = exp, log
        if self.p == 2:
            self._add = None
        else:
            digits = [self._digits(a) for a in range(q)]
            self._add = [
                [self._number([u + v for u, v in zip(da, db)]) for db in digits] for da in digits
            ]
        self._neg = [self._number([-d for d in self._digits(a)]) for a in range(q)]

    # -- field arithmetic ------------------------------------------------
    def fadd(self, a, b):
        if self._add is None:
            return a ^ b
        return self._add[a][b]

    def fneg(self, a):
        return self._neg[a]

    def fsub(self, a, b):
        return self.fadd(a, self._neg[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.spec)
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if n == 0 else 0
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def scalar(self, c):
        """The image of the integer c under Z -> GF(p)."""
        return c % self.p

    def generator(self):
        return self.exp[1]

    # -- hyperfield view ---------------------------------------------------
    def elements(self):
        return list(range(self.q))

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.q

    def add(self, a, b):
        return frozenset((self.fadd(a, b),))

    def neg(self, a):
        return self._neg[a]

    left_distributive = right_distributive = True

    def frobenius(self):
        return frobenius(self.p, self.k)

    # -- literals --------------------------------------------------------
    _term = re.compile(r"^(\d*)\*?(g(?:\^(\d+))?)?$")

    def parse(self, text):
        t = text.replace(" ", "")
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        if not t:
            raise HyperfieldError("empty field literal")
        total = 0
        for sign, body in re.findall(r"([+-]?)([^+-]+)", t):
            m = self._term.match(body)
            if m is None or (not m.group(1) and not m.group(2)):
                raise HyperfieldError(f"bad GF({self.q}) literal {text!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            value = self.scalar(coef)
            if m.group(2):
                power = int(m.group(3)) if m.group(3) else 1
                value = self.mul(value, self.pow(self.generator(), power))
            total = self.fsub(total, value) if sign == "-" else self.fadd(total, value)
        if "".join(s + b for s, b in re.findall(r"([+-]?)([^+-]+)", t)) != t:
            raise HyperfieldError(f"bad GF({self.q}) literal {text!r}")
        return total

    def format(self, a):
        if self.k == 1:
            return str(a)
        terms = []
        for i, d in reversed(list(enumerate(self._digits(a)))):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                power = "g" if i == 1 else f"g^{i}"
                terms.append(power if d == 1 else f"{d}*{power}")
        return "+".join(terms) if terms else "0"


def gf(p, k=1):
    return _gf(p, k)


@lru_cache(maxsize=None)
def _gf(p, k):
    return GF(p, k)


@lru_cache(maxsize=None)
def frobenius(p, k):
    """x -> x^p on GF(p^k), an automorphism of order k."""
    F = gf(p, k)
    tables = []
    for n in range(k):
        e = p**n
        tables.append([F.pow(x, e) for x in range(F.q)])
    return Automorphism("frob", [t.__getitem__ for t in tables])
