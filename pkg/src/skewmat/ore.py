"""Twisted polynomials K[T, sigma] over GF(p^k) and their left fractions.

Multiplication follows T*a = sigma(a)*T, so
(sum a_i T^i)(sum b_j T^j) = sum a_i sigma^i(b_j) T^(i+j).
"""

import random
import re
from functools import lru_cache

from skewmat.gf import frobenius, gf
from skewmat.hyperfield import INF, Hyperfield, HyperfieldError, hyperfield_from_spec, identity


class OreError(ValueError):
    pass


class OreRing:
    """K[T, sigma] for K = GF(p^k) and sigma the Frobenius map or the identity."""

    def __init__(self, p, k=1, twist="frob"):
        self.K = gf(p, k)
        self.p, self.k = p, k
        if twist == "frob":
            self.sigma = frobenius(p, k)
        elif twist == "id":
            self.sigma = identity()
        else:
            raise OreError(f"unknown twist {twist!r}")
        self.twist = twist
        self.spec = f"ore:{p}:{k}:{twist}"
        self.order = 1 if twist == "id" else k

    def __repr__(self):
        return f"OreRing({self.spec})"

    def sig(self, a, n):
        """sigma^n(a), n any integer."""
        return self.sigma.power(n % self.order)(a)

    def poly(self, coeffs):
        return OrePoly(self, coeffs)

    def const(self, c):
        return OrePoly(self, (c,))

    @property
    def zero(self):
        return OrePoly(self, ())

    @property
    def one(self):
        return OrePoly(self, (1,))

    @property
    def T(self):
        return OrePoly(self, (0, 1))

    def monomial(self, c, n):
        return OrePoly(self, (0,) * n + (c,))

    def fraction_field(self):
        return _fraction_field(self.p, self.k, self.twist)

    def monomial_field(self):
        """The monomial hyperfield K(T, sigma, min) receiving mu."""
        return _monomial_target(self.p, self.k, self.twist)

    def random_poly(self, rng, max_degree=3, density=0.6):
        coeffs = [rng.randrange(self.K.q) if rng.random() < density else 0 for _ in range(max_degree + 1)]
        return OrePoly(self, coeffs)

    def parse(self, text):
        return parse_ore(self, text)


def ore_ring(p, k=1, twist="frob"):
    return _ore_ring(p, k, twist)


@lru_cache(maxsize=None)
def _ore_ring(p, k, twist):
    return OreRing(p, k, twist)


def _monomial_target(p, k, twist):
    return hyperfield_from_spec(f"mono:gf:{p}:{k}:{twist}")


class OrePoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1]

    @property
    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    @property
    def low(self):
        """The coefficient at the valuation."""
        return self.coeffs[self.valuation]

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return isinstance(other, OrePoly) and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        K = self.ring.K
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return OrePoly(self.ring, [K.fadd(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self):
        K = self.ring.K
        return OrePoly(self.ring, [K.fneg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        R, K = self.ring, self.ring.K
        if not self.coeffs or not other.coeffs:
            return R.zero
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = K.fadd(out[i + j], K.mul(a, R.sig(b, i)))
        return OrePoly(R, out)

    def lscale(self, c):
        """c * self for a constant c."""
        K = self.ring.K
        return OrePoly(self.ring, [K.mul(c, a) for a in self.coeffs])

    def rscale(self, c):
        """self * c for a constant c."""
        R, K = self.ring, self.ring.K
        return OrePoly(R, [K.mul(a, R.sig(c, i)) for i, a in enumerate(self.coeffs)])

    def __repr__(self):
        return f"OrePoly({format_ore(self)})"

    def __str__(self):
        return format_ore(self)


# -- division ---------------------------------------------------------------


def right_divmod(f, g):
    """(q, r) with f = q*g + r and deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    R, K = f.ring, f.ring.K
    q = [0] * max(f.degree - g.degree + 1, 0)
    r = f
    m, d = g.degree, g.lead
    while not r.is_zero() and r.degree >= m:
        n = r.degree - m
        # x T^n * d T^m has leading coefficient x * sigma^n(d)
        x = K.div(r.lead, R.sig(d, n))
        q[n] = x
        r = r - R.monomial(x, n) * g
    return OrePoly(R, q), r


def left_divmod(f, g):
    """(q, r) with f = g*q + r and deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    R, K = f.ring, f.ring.K
    q = [0] * max(f.degree - g.degree + 1, 0)
    r = f
    m, d = g.degree, g.lead
    while not r.is_zero() and r.degree >= m:
        n = r.degree - m
        # d T^m * x T^n has leading coefficient d * sigma^m(x)
        x = R.sig(K.div(r.lead, d), -m)
        q[n] = x
        r = r - g * R.monomial(x, n)
    return OrePoly(R, q), r


def right_divide(f, g):
    return right_divmod(f, g)


def _euclid(f, g, divmod_, side):
    """Extended Euclid; returns (gcd, s, t) at the step where the remainder
    vanishes, with s*f + t*g = 0 (side 'left') or f*s + g*t = 0 (side 'right')."""
    R = f.ring
    r0, r1 = f, g
    s0, s1 = R.one, R.zero
    t0, t1 = R.zero, R.one
    while not r1.is_zero():
        q, r = divmod_(r0, r1)
        if side == "left":
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        else:
            s0, s1 = s1, s0 - s1 * q
            t0, t1 = t1, t0 - t1 * q
        r0, r1 = r1, r
    return r0, s1, t1


def _monic(f):
    return f.lscale(f.ring.K.inv(f.lead)) if not f.is_zero() else f


def right_gcd(f, g):
    """Monic d with f = f'*d and g = g'*d, of maximal degree."""
    d, _, _ = _euclid(f, g, right_divmod, "left")
    return _monic(d)


def left_gcd(f, g):
    """d with f = d*f' and g = d*g', of maximal degree, normalized monic."""
    d, _, _ = _euclid(f, g, left_divmod, "right")
    if d.is_zero():
        return d
    return d.rscale(f.ring.sig(f.ring.K.inv(d.lead), -d.degree))


def left_lcm_pair(f, g):
    """(u, v) of minimal degree with u*f = v*g, both nonzero for f, g nonzero."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("left lcm with zero")
    _, s, t = _euclid(f, g, right_divmod, "left")
    return s, -t


def right_lcm_pair(f, g):
    """(u, v) of minimal degree with f*u = g*v."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("right lcm with zero")
    _, s, t = _euclid(f, g, left_divmod, "right")
    return s, -t


def left_lcm(f, g):
    """The monic common left multiple u*f = v*g of minimal degree."""
    u, _ = left_lcm_pair(f, g)
    return _monic(u * f)


def right_lcm(f, g):
    u, _ = right_lcm_pair(f, g)
    m = f * u
    return m.rscale(f.ring.sig(f.ring.K.inv(m.lead), -m.degree))


def exact_left_quotient(f, d):
    """q with f = d*q."""
    q, r = left_divmod(f, d)
    if not r.is_zero():
        raise OreError("not a left multiple")
    return q


def exact_right_quotient(f, d):
    """q with f = q*d."""
    q, r = right_divmod(f, d)
    if not r.is_zero():
        raise OreError("not a right multiple")
    return q


# -- fractions ----------------------------------------------------------------


class OreFraction:
    """den^-1 * num, reduced so den is monic and left-coprime to num."""

    __slots__ = ("den", "num")

    def __init__(self, den, num, reduce=True):
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        R = den.ring
        if reduce:
            if num.is_zero():
                den = R.one
            else:
                g = left_gcd(den, num)
                if g.degree > 0:
                    den, num = exact_left_quotient(den, g), exact_left_quotient(num, g)
            c = R.K.inv(den.lead)
            den, num = den.lscale(c), num.lscale(c)
        self.den, self.num = den, num

    @classmethod
    def of(cls, f):
        return cls(f.ring.one, f, reduce=False)

    @property
    def ring(self):
        return self.den.ring

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    def __add__(self, other):
        a, b, c, d = self.den, self.num, other.den, other.num
        if a == c:
            return OreFraction(a, b + d)
        u, v = left_lcm_pair(a, c)
        return OreFraction(u * a, u * b + v * d)

    def __neg__(self):
        return OreFraction(self.den, -self.num, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b, c, d = self.den, self.num, other.den, other.num
        if b.is_zero() or d.is_zero():
            return OreFraction(a.ring.one, a.ring.zero, reduce=False)
        # b c^-1 = u^-1 v where u b = v c
        u, v = left_lcm_pair(b, c)
        return OreFraction(u * a, v * d)

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero fraction")
        return OreFraction(self.num, self.den)

    def __eq__(self, other):
        return isinstance(other, OreFraction) and self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.den.coeffs, self.num.coeffs))

    def right_form(self):
        """(b, a) with self = b * a^-1."""
        # den^-1 num = b a^-1  <=>  num a = den b
        u, v = right_lcm_pair(self.num, self.den) if not self.num.is_zero() else (self.ring.one, self.ring.zero)
        return (v, u) if not self.num.is_zero() else (self.ring.zero, self.ring.one)

    def __repr__(self):
        return f"OreFraction({format_fraction(self)})"

    def __str__(self):
        return format_fraction(self)


class OreField(Hyperfield):
    """K(T, sigma) viewed as a hyperfield with singleton sums."""

    finite = False
    commutative = False
    left_distributive = right_distributive = True

    def __init__(self, ring):
        self.ring = ring
        self.spec = f"frac:{ring.spec}"
        self.zero = OreFraction(ring.one, ring.zero, reduce=False)
        self.one = OreFraction(ring.one, ring.one, reduce=False)

    def contains(self, x):
        return isinstance(x, OreFraction) and x.ring is self.ring

    def add(self, x, y):
        return frozenset((x + y,))

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return x.inv()

    def nary_contains(self, terms, target):
        total = self.zero
        for t in terms:
            total = total + t
        return total == target

    def sample_elements(self, window=2):
        raise HyperfieldError("the fraction field has no finite sample")

    def parse(self, text):
        return parse_fraction(self.ring, text)

    def format(self, x):
        return format_fraction(x)

    def poly(self, f):
        return OreFraction.of(f)


@lru_cache(maxsize=None)
def _fraction_field(p, k, twist):
    return OreField(ore_ring(p, k, twist))


# -- mu and nu ----------------------------------------------------------------


def mu(f):
    """Lowest-order monomial a_m T^m; extended to fractions by mu(a)^-1 mu(b)."""
    if isinstance(f, OreFraction):
        M = f.ring.monomial_field()
        if f.is_zero():
            return M.zero
        return M.mul(M.inv(mu(f.den)), mu(f.num))
    M = f.ring.monomial_field()
    if f.is_zero():
        return M.zero
    return M.monomial(f.low, f.valuation)


def nu(f):
    if isinstance(f, OreFraction):
        if f.is_zero():
            return INF
        return f.num.valuation - f.den.valuation
    return f.valuation


def mu_hom(ring):
    from skewmat.homs import Homomorphism

    return Homomorphism("mu", ring.fraction_field(), ring.monomial_field(), mu)


def nu_hom(ring):
    from skewmat.homs import Homomorphism
    from skewmat.hyperfield import zmin

    return Homomorphism("nu", ring.fraction_field(), zmin(), nu)


def random_fraction(ring, rng, max_degree=3):
    den = ring.zero
    while den.is_zero():
        den = ring.random_poly(rng, max_degree)
    return OreFraction(den, ring.random_poly(rng, max_degree))


# -- literals -----------------------------------------------------------------


def _split_terms(text):
    """Split at top-level + and - signs, keeping the sign with each term."""
    terms, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and not cur.endswith(("^", "*")):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


_T_SUFFIX = re.compile(r"^(.*?)\*?T(?:\^(\d+))?$")


def parse_ore(ring, text):
    K = ring.K
    t = text.replace(" ", "")
    if not t:
        raise OreError("empty polynomial literal")
    total = ring.zero
    for term in _split_terms(t):
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        m = _T_SUFFIX.match(term)
        if m and "T" in term:
            coef_txt, deg = m.group(1), int(m.group(2) or 1)
        else:
            coef_txt, deg = term, 0
        if "T" in coef_txt:
            raise OreError(f"bad polynomial literal {text!r}")
        try:
            c = K.parse(coef_txt) if coef_txt else 1
        except HyperfieldError as exc:
            raise OreError(f"bad polynomial literal {text!r}: {exc}") from None
        if sign < 0:
            c = K.fneg(c)
        total = total + ring.monomial(c, deg)
    return total


def format_ore(f):
    K = f.ring.K
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = K.format(c)
        if ("+" in cs or "-" in cs) and i > 0:
            cs = f"({cs})"
        if i == 0:
            parts.append(cs)
        else:
            power = "T" if i == 1 else f"T^{i}"
            parts.append(power if c == 1 else f"{cs}*{power}")
    return "+".join(parts)


def parse_fraction(ring, text):
    """Polynomials, or den^-1*num written as inv(den)*(num)."""
    t = text.replace(" ", "")
    m = re.match(r"^inv\((.*)\)\*\((.*)\)$", t)
    if m:
        return OreFraction(parse_ore(ring, m.group(1)), parse_ore(ring, m.group(2)))
    return OreFraction.of(parse_ore(ring, t))


def format_fraction(x):
    if x.den.degree == 0:
        return format_ore(x.num)
    return f"inv({format_ore(x.den)})*({format_ore(x.num)})"


def random_polys(ring, n, seed=0, max_degree=3):
    rng = random.Random(seed)
    return [ring.random_poly(rng, max_degree) for _ in range(n)]
