"""Command-line front end. Every subcommand builds a Report; exit status is
0 when all its checks pass, 1 when one fails and 2 on bad arguments."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import errors
from .acceptance import CRITERIA, verify_all
from .ffscan import expected_reductions, finite_field_singular_scan, thread_count
from .lattice import GramLattice, discriminant, dual_basis
from .linalg import Matrix, det
from .period import ALPHA_PERP_FORM, alpha_chart, omega_alpha_component, period_relations
from .polarization import (classify_mod6, construct_polarization, descent_check,
                           elliptic_search, self_intersection)
from .polynomial import format_poly, partial, to_latex
from .quotient_correspondence import LX_GRAM, verify_pushforward_iso
from .report import Report
from .scalars import GaussianRational, specialize_scalar
from .sqh import cusp_certificate
from .surfaces import (control_point_report, eight_points, projected_quartic, quartic_at,
                       singular_points_symbolic)
from .torus_action import ORDER3, invariant_gram, order3_normal_form

__all__ = ["main", "run", "build_parser", "emit_report"]


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _rational(flag):
    def parse(text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"{flag} expects a rational like 2 or -1/2") from None
    return parse


# ---------------------------------------------------------------------------
# handlers


def cmd_lattice_report(args) -> Report:
    r = Report("lattice report")
    G = invariant_gram()
    r.add("Gram of the invariant classes has determinant -3", det(G) == -3,
          {"gram": G, "det": det(G)})
    _, D = dual_basis(GramLattice(G))
    r.add("dual lattice has discriminant -1/3", discriminant(D) == Fraction(-1, 3),
          {"gram": D.gram, "det": discriminant(D)})
    r.add("L_X has discriminant -27", det(LX_GRAM) == -27, det(LX_GRAM))
    r.extend(verify_pushforward_iso())
    return r


def _read_matrix(path):
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise UsageError("--matrix", f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError("--matrix", f"invalid JSON: {e.msg}") from None
    try:
        rows = [[int(x) for x in row] for row in data]
    except (TypeError, ValueError):
        raise UsageError("--matrix", "expected a JSON array of rows of integer strings") from None
    if len(rows) != 4 or any(len(row) != 4 for row in rows):
        raise UsageError("--matrix", "expected a 4x4 matrix")
    return Matrix(rows)


def cmd_action_normalform(args) -> Report:
    M = _read_matrix(args.matrix)
    r = Report("action normalform", {"matrix": M})
    try:
        U = order3_normal_form(M)
    except errors.PreconditionFailed as e:
        r.add("matrix has order 3 without fixed vectors", False, str(e))
        return r
    r.add("U is unimodular", abs(det(U)) == 1, {"U": U, "det": det(U)})
    r.add("U^-1 M U is the standard order-3 matrix", U.inverse() @ M @ U == ORDER3,
          {"conjugate": U.inverse() @ M @ U})
    return r


def _degree_check(r, d):
    res = classify_mod6()
    r.add("self-intersections take the residues {0, 2} mod 6", res == {0, 2}, sorted(res))
    if d <= 0:
        r.add(f"degree {d} is representable", False, f"degree {d} is not positive")
        return None
    if d % 6 not in res:
        r.add(f"degree {d} is representable", False,
              f"not representable: residues mod 6 are {{0,2}}, but {d} = {d % 6} mod 6")
        return None
    return True


def cmd_polarization(args) -> Report:
    d = args.degree
    r = Report(f"polarization {args.action}", {"degree": d})
    if _degree_check(r, d) is None:
        return r
    if args.action == "classify":
        r.add(f"degree {d} is representable", True, f"{d} = {d % 6} mod 6")
        return r
    v = construct_polarization(d)
    r.add(f"degree {d} is representable", True, v)
    r.add("constructed vector has the requested self-intersection",
          self_intersection(v) == d, {"vector": v, "self_intersection": self_intersection(v)})
    r.add("constructed vector is primitive", v.is_primitive())
    return r


def cmd_descent(args) -> Report:
    n = args.bound
    if n < 1:
        raise UsageError("--bound", "must be at least 1")
    r = Report("descent", {"bound": n})
    cert = descent_check(n)
    r.add("residue step: 8 n^2 - l^2 = 0 mod 3 forces n = l = 0 mod 3",
          cert.residue_step_holds, cert.residue_table)
    r.add(f"-12 n^2 is not a norm of the complement for 1 <= n <= {n}", cert.passed,
          {"pairs_checked": cert.pairs_checked, "reductions": len(cert.reductions),
           "representations": cert.representations})
    hits = elliptic_search(n)
    r.add(f"no nonzero (n, k, l) with 12 n^2 = 2 (k^2 - k l + l^2) in the box of size {n}",
          hits == [(0, 0, 0)], hits)
    return r


def cmd_period_classify(args) -> Report:
    try:
        c1 = GaussianRational.parse(args.omega)
    except ValueError as e:
        raise UsageError("--omega", str(e)) from None
    r = Report("period classify", {"omega": str(c1)})
    w = alpha_chart(c1)
    rel = period_relations(w, ALPHA_PERP_FORM)
    r.add("B(w, w) = 0", rel.selfpair == 0, {"point": w, "value": str(rel.selfpair)})
    r.add("B(w, conj w) > 0", rel.hermitian > 0, rel.hermitian)
    try:
        comp = omega_alpha_component(c1)
        r.add("lies in one of the two components", True, comp)
    except errors.NotInDomain as e:
        r.add("lies in one of the two components", False, str(e))
    return r


def cmd_project(args) -> Report:
    pq = projected_quartic(args.coords)
    r = Report("project", {"k": "generic" if args.k is None else args.k, "coords": args.coords})
    for name, ok in pq.checks.items():
        r.add(name, ok)
    r.add("eliminant is a nonzero multiple of the closed form", pq.matches and bool(pq.scalar),
          {"scalar": str(pq.scalar)})
    if args.k is None:
        f, notes = pq.polynomial, []
    else:
        try:
            f, notes = quartic_at(args.k, args.coords)
        except errors.Pole as e:
            raise UsageError("--k", str(e)) from None
    text = to_latex(f) if args.latex else format_poly(f)
    r.add("quartic", bool(f.terms), {"polynomial": text, "notes": notes})
    return r


def cmd_singular_verify(args) -> Report:
    r = Report("singular verify", {"k": "generic" if args.k is None else args.k,
                                   "mode": args.mode, "prime": args.prime})
    if args.mode == "symbolic":
        if args.prime is not None:
            raise UsageError("--prime", "only used with --mode finite-field")
        reps = singular_points_symbolic()
        r.add("all partials vanish at the eight points (generic k)",
              all(s.singular for s in reps), [s for s in reps if s.coords == "x"])
        c = control_point_report()
        r.add("control point (1:1:1:1) is a smooth point of the surface",
              c.value == 0 and not c.singular, c)
        if args.k is not None:
            f, notes = quartic_at(args.k)
            grads = [partial(f, n) for n in f.registry.names]
            ok = all(g.evaluate(pt.coords) == 0 for g in grads for pt in eight_points())
            r.add(f"all partials vanish at the eight points at k = {args.k}", ok,
                  {"notes": notes})
        return r
    if args.k is None:
        raise UsageError("--k", "required with --mode finite-field")
    if args.prime is None:
        raise UsageError("--prime", "required with --mode finite-field")
    try:
        found = finite_field_singular_scan(args.k, args.prime, threads=thread_count())
        expected = expected_reductions(args.k, args.prime)
    except (errors.BadPrime, errors.BadParameter, errors.CollidingExpectedPoints) as e:
        flag = "--prime" if isinstance(e, errors.BadPrime) else "--k"
        raise UsageError(flag, str(e)) from None
    p = args.prime
    r.add(f"scan of all {p**3 + p**2 + p + 1} points finds {len(found)} singular points",
          len(found) == 8, found)
    r.add("they are the reductions of the eight points", found == expected, expected)
    return r


def cmd_cusp_certify(args) -> Report:
    r = Report("cusp certify", {"family": args.family,
                                "k": "generic" if args.k is None else args.k})
    try:
        cert = cusp_certificate(args.family, args.k)
    except errors.DegenerateParameter as e:
        raise UsageError("--k", str(e)) from None
    except errors.NotSQH as e:
        r.add("weight-1 part is a*cube + b*product", False, str(e))
        return r
    r.add("no monomial of weight below 1", cert.min_weight >= 1, cert.min_weight)
    r.add("weight-1 part is a*cube + b*product", cert.shape_ok, str(cert.weight_one_part))
    r.add("cubic coefficient nonzero", bool(cert.cubic_coefficient), str(cert.cubic_coefficient))
    r.add("product coefficient nonzero", bool(cert.product_coefficient),
          str(cert.product_coefficient))
    if args.k is not None:
        generic = cusp_certificate(args.family)
        same = (specialize_scalar(generic.cubic_coefficient, args.k) == cert.cubic_coefficient
                and specialize_scalar(generic.product_coefficient, args.k)
                == cert.product_coefficient)
        r.add("agrees with the generic certificate specialised", same)
    r.add("certificate", cert.valid, cert)
    return r


def cmd_verify_all(args) -> Report:
    which = args.criterion or None
    if which and any(n not in CRITERIA for n in which):
        raise UsageError("--criterion", f"criteria are numbered 1..{len(CRITERIA)}")
    return verify_all(which)


# ---------------------------------------------------------------------------
# plumbing


def build_parser() -> argparse.ArgumentParser:
    def shared(suppress):
        # subcommands repeat the flags without defaults, so a flag given
        # before the subcommand is not reset by the subparser
        extra = {"default": argparse.SUPPRESS} if suppress else {}
        q = argparse.ArgumentParser(add_help=False)
        q.add_argument("--json", action="store_true", help="emit JSON instead of text", **extra)
        q.add_argument("--out", metavar="PATH", help="write the report here instead of stdout",
                       **extra)
        q.add_argument("--timing", action="store_true", help="include wall time in the report",
                       **extra)
        return q

    common = shared(True)
    p = argparse.ArgumentParser(prog="cusplab", parents=[shared(False)],
                                description="Exact checks for the cusp lattice and quartic surface.")
    sub = p.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", parents=[common], help="invariant lattice and its dual")
    lat_sub = lat.add_subparsers(dest="action", required=True)
    lat_sub.add_parser("report", parents=[common]).set_defaults(func=cmd_lattice_report)

    act = sub.add_parser("action", parents=[common], help="order-3 action normal form")
    act_sub = act.add_subparsers(dest="action", required=True)
    nf = act_sub.add_parser("normalform", parents=[common])
    nf.add_argument("--matrix", required=True, metavar="FILE",
                    help="JSON array of rows of integer strings")
    nf.set_defaults(func=cmd_action_normalform)

    pol = sub.add_parser("polarization", parents=[common], help="polarization degrees")
    pol.add_argument("action", choices=["classify", "construct"])
    pol.add_argument("--degree", type=int, required=True)
    pol.set_defaults(func=cmd_polarization)

    des = sub.add_parser("descent", parents=[common], help="no elliptic curves in the complement")
    des.add_argument("--bound", type=int, default=100)
    des.set_defaults(func=cmd_descent)

    per = sub.add_parser("period", parents=[common], help="period domain components")
    per_sub = per.add_subparsers(dest="action", required=True)
    pc = per_sub.add_parser("classify", parents=[common])
    pc.add_argument("--omega", required=True, metavar="C1", help="Gaussian rational, e.g. 1/2+3i")
    pc.set_defaults(func=cmd_period_classify)

    pro = sub.add_parser("project", parents=[common], help="the projected quartic")
    pro.add_argument("--k", type=_rational("--k"))
    pro.add_argument("--coords", choices=["x", "y"], default="x")
    pro.add_argument("--latex", action="store_true")
    pro.set_defaults(func=cmd_project)

    sing = sub.add_parser("singular", parents=[common], help="singular points of the quartic")
    sing_sub = sing.add_subparsers(dest="action", required=True)
    sv = sing_sub.add_parser("verify", parents=[common])
    sv.add_argument("--k", type=_rational("--k"))
    sv.add_argument("--mode", choices=["symbolic", "finite-field"], default="symbolic")
    sv.add_argument("--prime", type=int)
    sv.set_defaults(func=cmd_singular_verify)

    cusp = sub.add_parser("cusp", parents=[common], help="weighted-jet cusp certificates")
    cusp_sub = cusp.add_subparsers(dest="action", required=True)
    cc = cusp_sub.add_parser("certify", parents=[common])
    cc.add_argument("--family", choices=["vertex", "plane"], required=True)
    cc.add_argument("--k", type=_rational("--k"))
    cc.set_defaults(func=cmd_cusp_certify)

    va = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    va.add_argument("--criterion", type=int, action="append", metavar="N",
                    help="run only criterion N (repeatable)")
    va.set_defaults(func=cmd_verify_all)
    return p


def emit_report(report: Report, fmt: str = "text", out=None) -> int:
    text = report.dumps() if fmt == "json" else report.to_text()
    data = text.encode()
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)
    return len(data)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t = time.perf_counter()
    try:
        report = args.func(args)
    except UsageError as e:
        print(f"cusplab: error: {e}", file=sys.stderr)
        return 2
    report.wall_time = time.perf_counter() - t if args.timing else None
    try:
        emit_report(report, "json" if args.json else "text", args.out)
    except OSError as e:
        print(f"cusplab: error: --out: {e.strerror}", file=sys.stderr)
        return 2
    return 0 if report.passed else 1


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
