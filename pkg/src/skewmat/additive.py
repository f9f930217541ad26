"""Additive (p-)polynomials sum_e sum_j a_j X_e^(p^j) and the hat/psi maps.

An AdditivePoly is stored sparsely as {variable: {j: a_j}} with coefficients
in GF(p^k); the exponent of the term is p^j.
"""

from skewmat.hyperfield import HyperfieldError
from skewmat.ore import OreError, OrePoly


class AdditivePoly:
    def __init__(self, field, terms):
        self.field = field
        clean = {}
        for var, row in terms.items():
            row = {j: c for j, c in row.items() if c}
            if row:
                clean[str(var)] = row
        self.terms = clean

    @property
    def p(self):
        return self.field.p

    def variables(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, AdditivePoly) and self.field is other.field and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((v, tuple(sorted(r.items()))) for v, r in self.terms.items())))

    def __add__(self, other):
        K = self.field
        out = {v: dict(r) for v, r in self.terms.items()}
        for v, r in other.terms.items():
            row = out.setdefault(v, {})
            for j, c in r.items():
                row[j] = K.fadd(row.get(j, 0), c)
        return AdditivePoly(K, out)

    def __neg__(self):
        K = self.field
        return AdditivePoly(K, {v: {j: K.fneg(c) for j, c in r.items()} for v, r in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def frobenius_power(self, n):
        """self^(p^n), which in characteristic p raises every coefficient and exponent."""
        K = self.field
        e = self.p**n
        return AdditivePoly(K, {v: {j + n: K.pow(c, e) for j, c in r.items()} for v, r in self.terms.items()})

    def scale(self, c):
        K = self.field
        return AdditivePoly(K, {v: {j: K.mul(c, a) for j, a in r.items()} for v, r in self.terms.items()})

    def __repr__(self):
        return f"AdditivePoly({format_additive(self)})"

    def __str__(self):
        return format_additive(self)


def from_exponents(field, terms):
    """Build from {variable: {exponent: coefficient}}; every exponent must be a power of p."""
    p = field.p
    out = {}
    for var, row in terms.items():
        for exp, c in row.items():
            j, e = 0, 1
            while e < exp:
                e *= p
                j += 1
            if e != exp:
                raise HyperfieldError(f"exponent {exp} of {var} is not a power of {p}")
            out.setdefault(var, {})[j] = field.fadd(out.get(var, {}).get(j, 0), c)
    return AdditivePoly(field, out)


def hat(f, var="X"):
    """sum a_j T^j -> sum a_j var^(p^j)."""
    if f.ring.twist != "frob":
        raise OreError("the hat map needs the Frobenius twist")
    return AdditivePoly(f.ring.K, {var: dict(enumerate(f.coeffs))})


def psi(column, z_labels=None):
    """A column (v_1..v_d) of Ore polynomials -> sum_i hat(v_i)(z_i)."""
    column = list(column)
    if not column:
        raise OreError("empty column")
    K = column[0].ring.K
    z_labels = z_labels or [f"z{i + 1}" for i in range(len(column))]
    total = AdditivePoly(K, {})
    for f, z in zip(column, z_labels):
        total = total + hat(f, z)
    return total


def substitute(q, values):
    """q(values[X] for X), composing p-powers symbolically.

    ``values`` maps each variable of q to an AdditivePoly; a term
    a_j X^(p^j) becomes a_j * values[X]^(p^j).
    """
    total = AdditivePoly(q.field, {})
    for var, row in q.terms.items():
        try:
            inner = values[var]
        except KeyError:
            raise HyperfieldError(f"no value for variable {var}") from None
        for j, c in row.items():
            total = total + inner.frobenius_power(j).scale(c)
    return total


def compose(outer, inner):
    """outer(inner(Z)), substituting inner for every variable of outer."""
    return substitute(outer, {v: inner for v in outer.terms})


def q_from_circuit(U, labels=None):
    """q_U = sum over the support of hat(U_e)(X_e)."""
    U = list(U)
    labels = labels or [str(i + 1) for i in range(len(U))]
    K = U[0].ring.K
    total = AdditivePoly(K, {})
    for f, e in zip(U, labels):
        if not isinstance(f, OrePoly):
            raise OreError("q_from_circuit needs polynomial entries")
        if not f.is_zero():
            total = total + hat(f, f"X{e}")
    return total


def sigma_derivative(q, variables, monomial_field):
    """e -> a_m T^m with m the least j carrying a coefficient of X_e, else 0."""
    out = []
    for var in variables:
        row = q.terms.get(var)
        if not row:
            out.append(monomial_field.zero)
            continue
        m = min(row)
        out.append(monomial_field.monomial(row[m], m))
    return out


def format_additive(q):
    K = q.field
    if q.is_zero():
        return "0"
    parts = []
    for var in q.variables():
        for j in sorted(q.terms[var], reverse=True):
            c = q.terms[var][j]
            mono = var if j == 0 else f"{var}^(p^{j})" if j > 1 else f"{var}^p"
            neg = K.fneg(c)
            if c == 1:
                parts.append(("+", mono))
            elif neg == 1:
                parts.append(("-", mono))
            else:
                cs = K.format(c)
                parts.append(("+", f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}"))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        text += sign + mono
    return text
