"""The two-dimensional Ore example run end to end: circuits, additive
polynomials, sigma-derivatives, cocircuits and the cross ratio."""

from skewmat.additive import from_exponents, psi, q_from_circuit, sigma_derivative, substitute
from skewmat.hmatroid import (
    check_circuit_axioms,
    check_plucker,
    coords_from_signature,
    cross_ratio,
    normalize,
    orthogonality_check,
)
from skewmat.kernel import check_dependence, oracle_circuits, ore_matroid, worked_example
from skewmat.matroid import Matroid
from skewmat.ore import OreFraction, format_ore, mu
from skewmat.report import Report


def _fractions(ring, polys):
    return tuple(OreFraction.of(f) for f in polys)


def example_report(p=2, k=2, a=None):
    """Run every claim about the example and return (report, info lines)."""
    cols, a = worked_example(p, k, a)
    om = ore_matroid(cols)
    R, K = om.ring, om.ring.K
    F, Hs = om.fraction_field, om.monomial_field
    T, one, zero = R.T, R.one, R.zero
    minus = lambda f: zero - f  # noqa: E731
    report = Report(f"worked example p={p} k={k} a={K.format(a)}")
    info = []

    report.record("underlying matroid is U_{2,4}", om.matroid == Matroid.uniform(2, 4, list(om.labels)))
    report.record("dependences are exact", not check_dependence(om), check_dependence(om))
    report.record("oracle circuits agree", oracle_circuits(cols) == om.circuits)

    U = om.circuit("123")
    info.append("circuit 123: (" + ", ".join(format_ore(f) for f in U) + ")")
    info.append("circuit 123 mu-image: " + om.mu_signature().format_vector(tuple(mu(f) for f in U)))
    expected_U = [R.monomial(1, 3) + R.monomial(1, 2), one, minus(T), zero]
    report.record(
        "circuit 123 = (T^3+T^2, 1, -T, 0) up to left scaling",
        normalize(F, _fractions(R, U), "left") == normalize(F, _fractions(R, expected_U), "left"),
    )

    q = q_from_circuit(U)
    info.append(f"q_U = {q}")
    expected_q = from_exponents(
        K, {"X1": {p**3: 1, p**2: 1}, "X2": {1: 1}, "X3": {p: K.fneg(1)}}
    )
    report.record("q_U = X1^(p^3)+X1^(p^2)+X2-X3^p", q == expected_q, str(q))
    deriv = sigma_derivative(q, [f"X{e}" for e in om.labels], Hs)
    report.record("sigma-derivative of q_U = mu_* U", deriv == [mu(f) for f in U])

    x = [psi(c) for c in cols]
    info.extend(f"x{e} = psi(v{e}) = {v}" for e, v in zip(om.labels, x))
    x3 = from_exponents(K, {"z1": {p**2: 1, p: 1}, "z2": {p**2: 1}})
    report.record("x3 = z1^(p^2)+z1^p+z2^(p^2)", x[2] == x3, str(x[2]))
    report.record("q_U(x1..x4) = 0", substitute(q, {f"X{e}": v for e, v in zip(om.labels, x)}).is_zero())

    V = om.cocircuit("234")
    info.append("cocircuit 234: (" + ", ".join(format_ore(f) for f in V) + ")")
    muV = tuple(mu(f) for f in V)
    info.append("cocircuit 234 mu-image: " + om.mu_signature().format_vector(muV))
    expected_V = [zero, R.monomial(1, 3), R.monomial(1, 2), R.monomial(1, 4) + R.monomial(a, 1)]
    report.record(
        "cocircuit 234 = (0, T^3, T^2, T^4+aT) up to right scaling",
        normalize(F, _fractions(R, V), "right") == normalize(F, _fractions(R, expected_V), "right"),
    )
    expected_muV = (Hs.zero, Hs.monomial(1, 3), Hs.monomial(1, 2), Hs.monomial(a, 1))
    report.record(
        "cocircuit mu-image = (0, T^3, T^2, aT) up to right scaling",
        normalize(Hs, muV, "right") == normalize(Hs, expected_muV, "right"),
    )

    ms = om.mu_signature()
    report.merge(check_circuit_axioms(ms), prefix="mu-image ")
    report.merge(check_plucker(coords_from_signature(ms)), prefix="mu-image ")
    report.merge(orthogonality_check(ms, om.mu_cosignature(), k=len(om.labels)), prefix="mu-image full ")

    cr = cross_ratio(ms, (), "1", "2", "3", "4")
    info.append(f"cross_ratio(∅;1,2,3,4) = {Hs.format(cr)}")
    a_inv = K.inv(a)
    info.append(f"a^-1 = {K.format(a_inv)}, sigma(a)^-1 = {K.format(K.inv(R.sig(a, 1)))}")
    report.record("cross ratio = sigma(a)^-1", cr == Hs.monomial(K.inv(R.sig(a, 1)), 0), Hs.format(cr))
    report.record("cross ratio = a^-1", cr == Hs.monomial(a_inv, 0), (Hs.format(cr), K.format(a_inv)))
    return report, info
