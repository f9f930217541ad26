"""Command-line entry point ``skewmat``.

Exit status: 0 when every check passes, 1 on a mathematical violation
(the witness is printed), 2 on bad input.  Every output line starts with
PASS, FAIL or INFO.
"""

import argparse
import sys

from skewmat import textio
from skewmat.axioms import axiom_check_hyperfield
from skewmat.boundary import boundary, boundary_report, check_flock, flock_window
from skewmat.hmatroid import (
    SignatureError,
    check_circuit_axioms,
    check_coordinates,
    check_plucker,
    coords_from_signature,
    cr_properties_check,
    cross_ratio,
    dual_matroid,
    frames,
    minor_signature,
    orthogonality_check,
    pushforward,
    rescale,
    signature_from_coords,
    u24_classify,
    u24_make,
)
from skewmat.homs import kappa, zeta
from skewmat.hyperfield import Leveled, hyperfield_from_spec
from skewmat.kernel import column_signature, ore_matroid, quasi_det, quasi_det_by_inverse
from skewmat.matroid import bits
from skewmat.ore import format_fraction
from skewmat.report import Report
from skewmat.walkthrough import example_report


class Output:
    def __init__(self, stream):
        self.stream = stream
        self.failed = False

    def info(self, text):
        for line in str(text).splitlines() or [""]:
            print(f"INFO {line}", file=self.stream)

    def report(self, report):
        if report.title:
            self.info(report.title)
        for line in report.lines():
            print(line, file=self.stream)
        self.failed |= not report.ok


def _elements(text):
    if not text:
        return []
    return text.replace(",", " ").split()


def _signature(args):
    if not args.circuits:
        raise textio.FormatError("--circuits FILE is required")
    return textio.parse_signature(textio.read_text(args.circuits), args.hf)


# -- hf ---------------------------------------------------------------------------


def cmd_hf_check(args, out):
    H = hyperfield_from_spec(args.spec)
    report = axiom_check_hyperfield(H, window=args.window, seed=args.seed)
    out.report(report)
    out.info("all axioms pass" if report.ok else "some axioms fail")


def cmd_hf_table(args, out):
    H = hyperfield_from_spec(args.spec)
    if not H.finite:
        els = H.sample_elements(args.window)
        out.info(f"{H.spec} is infinite; showing levels {-args.window}..{args.window}")
    else:
        els = H.elements()
    fmt = H.format
    out.info("elements: " + " ".join(fmt(x) for x in els))
    for x in els:
        for y in els:
            out.info(f"{fmt(x)} + {fmt(y)} = {H.format_set(H.add(x, y))}")
    for x in els:
        for y in els:
            out.info(f"{fmt(x)} * {fmt(y)} = {fmt(H.mul(x, y))}")


# -- matroid --------------------------------------------------------------------


def cmd_matroid_check(args, out):
    N = textio.parse_matroid(textio.read_text(args.file), args.mode)
    report = Report(f"matroid on {' '.join(N.ground)}")
    report.record("circuit axioms", True)
    report.note(f"rank {N.rank}, {len(N.bases)} bases, {len(N.circuits)} circuits")
    out.report(report)
    out.info(textio.format_matroid(N, "basis").rstrip())


# -- hsig -------------------------------------------------------------------------


def cmd_hsig_coords(args, out):
    C = _signature(args)
    cc = coords_from_signature(C)
    out.report(check_coordinates(cc))
    out.info(textio.format_coordinates(cc).rstrip())


def cmd_hsig_check(args, out):
    C = _signature(args)
    if args.level == "C":
        out.report(check_circuit_axioms(C))
    elif args.level == "CC":
        out.report(check_coordinates(coords_from_signature(C)))
    else:
        out.report(check_plucker(coords_from_signature(C)))


def cmd_hsig_dual(args, out):
    C = _signature(args)
    D = dual_matroid(C)
    out.info(textio.format_signature(D).rstrip())
    left, right = (C, D) if C.side == "left" else (D, C)
    out.report(orthogonality_check(left, right, args.k))


def cmd_hsig_minor(args, out):
    C = _signature(args)
    m = minor_signature(C, _elements(args.contract), _elements(args.delete))
    out.info(textio.format_signature(m).rstrip())
    out.report(check_plucker(coords_from_signature(m)))


def _vector(H, text, n):
    vals = [H.parse(x) for x in text.split(",")] if "," in text else [H.parse(x) for x in text.split()]
    if len(vals) != n:
        raise textio.FormatError(f"--rho needs {n} entries, got {len(vals)}")
    return vals


def cmd_hsig_rescale(args, out):
    C = _signature(args)
    if not args.rho:
        raise textio.FormatError("--rho is required")
    R = rescale(C, _vector(C.field, args.rho, len(C.ground)))
    out.info(textio.format_signature(R).rstrip())
    out.report(check_plucker(coords_from_signature(R)))


def cmd_hsig_push(args, out):
    C = _signature(args)
    if args.hom == "zeta" and not isinstance(C.field, Leveled):
        raise textio.FormatError(f"zeta needs a leveled hyperfield, not {C.field.spec}")
    f = kappa(C.field) if args.hom == "kappa" else zeta(C.field)
    P = pushforward(f, C)
    out.info(textio.format_signature(P).rstrip())
    report = Report(f"push-forward along {f.name}")
    report.record("underlying matroid preserved", P.matroid == C.matroid)
    source_ok = check_plucker(coords_from_signature(C)).ok
    report.record("image passes P0-P4 when the source does", not source_ok or check_plucker(coords_from_signature(P)).ok)
    out.report(report)


def cmd_hsig_crossratio(args, out):
    C = _signature(args)
    cc = coords_from_signature(C)
    N, H = cc.matroid, cc.field
    if args.frame:
        head, _, tail = args.frame.partition(";")
        F, quad = (head, tail) if tail else ("", head)
        a, b, c, d = _elements(quad)
        F = _elements(F)
        x = cross_ratio(cc, F, a, b, c, d)
        out.info(f"cross_ratio({''.join(F) or '∅'};{a},{b},{c},{d}) = {H.format(x)}")
        return
    for F, a, b, c, d in frames(N):
        label = "".join(N.labels(F)) or "∅"
        quad = ",".join(N.ground[i] for i in (a, b, c, d))
        out.info(f"cross_ratio({label};{quad}) = {H.format(cross_ratio(cc, N.labels(F), a, b, c, d))}")
    out.report(cr_properties_check(cc))


def cmd_hsig_u24(args, out):
    if args.circuits:
        C = _signature(args)
        x, y = u24_classify(C)
        H = C.field
        out.info(f"U_H(x, y) with x = {H.format(x)}, y = {H.format(y)}")
        return
    if not args.hf:
        raise textio.FormatError("hsig u24 needs --hf or --circuits")
    H = hyperfield_from_spec(args.hf)
    if not H.finite:
        raise textio.FormatError("u24 enumeration needs a finite hyperfield")
    fmt = H.format
    for x in H.nonzero():
        for y in H.nonzero():
            if H.one not in H.add(x, y):
                continue
            M = u24_make(H, x, y)
            c_ok = check_circuit_axioms(M).ok
            p_ok = check_plucker(coords_from_signature(M)).ok
            verdict = lambda ok: "pass" if ok else "fail"  # noqa: E731
            out.info(f"x={fmt(x)} y={fmt(y)}: circuits {verdict(c_ok)}, quasi-Plücker {verdict(p_ok)}")
            report = Report()
            report.record(f"C <=> P at x={fmt(x)} y={fmt(y)}", c_ok == p_ok)
            out.report(report)


# -- boundary, flocks, Ore -------------------------------------------------------


def _mono_signature(args):
    if args.ore:
        R, matrix = textio.parse_ore_matrix(textio.read_text(args.ore))
        return ore_matroid(textio.columns_of(matrix)).mu_signature()
    return _signature(args)


def cmd_boundary(args, out):
    C = _mono_signature(args)
    b = boundary(C)
    N = b.matroid
    out.info("valuation: " + " ".join(f"{N.fmt(B)}:{v}" for B, v in sorted(b.valuation.values.items(), key=lambda kv: bits(kv[0]))))
    out.info("bases: " + " ".join(N.fmt(B) for B in sorted(N.bases, key=bits)))
    out.info(textio.format_signature(b.signature).rstrip())
    out.report(boundary_report(C))


def cmd_flock(args, out):
    C = _mono_signature(args)
    F = flock_window(C, args.window)
    if args.dump:
        for line in F.lines():
            out.info(line)
    out.report(check_flock(F))


def cmd_ore_matroid(args, out):
    R, matrix = textio.parse_ore_matrix(textio.read_text(args.file))
    om = ore_matroid(textio.columns_of(matrix))
    N = om.matroid
    out.info(f"rank {N.rank}; bases: " + " ".join(N.fmt(B) for B in sorted(N.bases, key=bits)))
    F = om.fraction_field
    for C, U in om.circuits.items():
        out.info(f"circuit {N.fmt(C)}: (" + ", ".join(format_fraction(F.poly(f)) for f in U) + ")")
    for D, V in om.cocircuits.items():
        out.info(f"cocircuit {N.fmt(D)}: (" + ", ".join(format_fraction(F.poly(f)) for f in V) + ")")
    ms = om.mu_signature()
    out.info(textio.format_signature(ms).rstrip())
    out.report(check_circuit_axioms(ms))
    out.report(orthogonality_check(ms, om.mu_cosignature(), 3))


def cmd_ore_quasidet(args, out):
    R, matrix = textio.parse_ore_matrix(textio.read_text(args.file))
    F = R.fraction_field()
    n = len(matrix)
    i, j = args.i - 1, args.j - 1
    if not (0 <= i < n and 0 <= j < n):
        raise textio.FormatError(f"indices must lie in 1..{n}")
    x = quasi_det(matrix, i, j, F)
    out.info(f"|A|_{args.i}{args.j} = {format_fraction(x)}")
    report = Report()
    report.record("agrees with the inverse-entry formula", x == quasi_det_by_inverse(matrix, i, j, F))
    out.report(report)


def cmd_example(args, out):
    report, info = example_report(args.p, args.k, args.a)
    for line in info:
        out.info(line)
    out.report(report)


# -- parser ------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="skewmat", description="Matroids over skew hyperfields.")
    sub = parser.add_subparsers(dest="command", required=True)

    hf = sub.add_parser("hf", help="hyperfield axioms and tables").add_subparsers(dest="action", required=True)
    p = hf.add_parser("check")
    p.add_argument("spec")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_hf_check)
    p = hf.add_parser("table")
    p.add_argument("spec")
    p.add_argument("--window", type=int, default=1)
    p.set_defaults(func=cmd_hf_table)

    mat = sub.add_parser("matroid").add_subparsers(dest="action", required=True)
    p = mat.add_parser("check")
    p.add_argument("file")
    p.add_argument("--mode", choices=("full", "modular"), default="full")
    p.set_defaults(func=cmd_matroid_check)

    hs = sub.add_parser("hsig", help="signatures and coordinates").add_subparsers(dest="action", required=True)

    def sig_parser(name, func):
        q = hs.add_parser(name)
        q.add_argument("--hf")
        q.add_argument("--circuits", metavar="FILE")
        q.set_defaults(func=func)
        return q

    sig_parser("coords", cmd_hsig_coords)
    sig_parser("check", cmd_hsig_check).add_argument("--level", choices=("C", "CC", "P"), default="C")
    sig_parser("dual", cmd_hsig_dual).add_argument("--k", type=int, default=3)
    q = sig_parser("minor", cmd_hsig_minor)
    q.add_argument("--contract", default="")
    q.add_argument("--delete", default="")
    sig_parser("rescale", cmd_hsig_rescale).add_argument("--rho")
    sig_parser("push", cmd_hsig_push).add_argument("--hom", choices=("kappa", "zeta"), default="kappa")
    sig_parser("crossratio", cmd_hsig_crossratio).add_argument("--frame", help="'F;a,b,c,d'")
    sig_parser("u24", cmd_hsig_u24)

    for name, func in (("boundary", cmd_boundary), ("flock", cmd_flock)):
        q = sub.add_parser(name)
        q.add_argument("--hf")
        q.add_argument("--circuits", metavar="FILE")
        q.add_argument("--ore", metavar="FILE", help="Ore matrix file; its mu-image is used")
        q.set_defaults(func=func)
        if name == "flock":
            q.add_argument("--window", type=int, default=2)
            q.add_argument("--dump", action="store_true")

    ore = sub.add_parser("ore").add_subparsers(dest="action", required=True)
    p = ore.add_parser("matroid")
    p.add_argument("file")
    p.set_defaults(func=cmd_ore_matroid)
    p = ore.add_parser("quasidet")
    p.add_argument("file")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_ore_quasidet)

    ex = sub.add_parser("example").add_subparsers(dest="action", required=True)
    p = ex.add_parser("section5")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--a")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    out = Output(stream)
    try:
        args.func(args, out)
    except SignatureError as exc:
        # axiom violations found while building derived objects
        if exc.args and len(exc.args) > 1 and exc.args[1] is not None:
            print(f"FAIL {exc.args[0]} witness: {exc.args[1]}", file=stream)
            return 1
        print(f"INFO error: {exc}", file=stream)
        return 2
    except textio.ERRORS + (ValueError, ZeroDivisionError) as exc:
        print(f"INFO error: {exc}", file=stream)
        return 2
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
