"""Command-line front end: expansion, verification and the numeric self-test.

Exit codes: 0 success, 1 verification/tolerance failure, 2 usage error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import anomaly, kring, modforms, theta

EXPAND_NAMES = (
    "E4",
    "E6",
    "delta1",
    "eps1",
    "delta2",
    "eps2",
    "A",
    "theta1",
    "theta2",
    "theta3",
    "WY",
    "logd1",
    "logd2",
    "logd3",
    "Theta1",
    "Theta2",
    "Theta3",
    "Q",
    "Q1",
    "Q2",
    "Q3",
    "ThetaTL",
    "ThetaStarTL",
)

DEFAULT_CASES = [
    ("spin_sl2z", 7),
    ("spin_sl2z", 11),
    ("spinc_witten", 7),
    ("spinc_witten", 11),
    ("spinc_star", 13),
    ("gamma_spin", 7),
    ("gamma_spin", 11),
    ("gamma_spinc_witten", 11),
    ("gamma_spinc_star", 13),
]

HEAVY_CASES = [
    ("spin_sl2z", 15),
    ("spin_sl2z", 19),
    ("spin_sl2z", 23),
    ("spinc_witten", 15),
    ("spinc_witten", 19),
    ("spinc_witten", 23),
    ("spinc_star", 17),
    ("gamma_spin", 15),
    ("gamma_spinc_witten", 15),
    ("gamma_spinc_star", 17),
]


def _default_order():
    env = os.environ.get("ODDGENUS_ORDER")
    if env:
        return 2 * int(env) + 1
    return None


def _expand_series(name, order_half, degree_cap):
    if name in ("E4", "E6"):
        return modforms.eisenstein(int(name[1]), order_half).series
    if name in ("delta1", "eps1", "delta2", "eps2"):
        group = "Gamma0_2" if name.endswith("1") else "Gamma0_upper_2"
        d, e = modforms.delta_eps(group, order_half)
        return d.series if name.startswith("delta") else e.series
    if name in ("A", "theta1", "theta2", "theta3", "WY"):
        kind = {"theta1": "Q1", "theta2": "Q2", "theta3": "Q3"}.get(name, name)
        return theta.theta_quotient(kind, "X", order_half, degree_cap).series
    if name in ("logd1", "logd2", "logd3"):
        return theta.theta_quotient(f"LOGD{name[-1]}", "Z", order_half, degree_cap).series
    if name in kring.BUILDERS:
        return kring.build(name, order_half)
    raise KeyError(name)


def cmd_expand(args):
    order_half = args.order_half if args.order_half else 2 * args.order + 1
    try:
        series = _expand_series(args.name, order_half, args.degree_cap)
    except KeyError:
        print(f"error: unknown name {args.name!r}; choose from {', '.join(EXPAND_NAMES)}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {"name": args.name, "series": series.to_json_obj()}
        out = json.dumps(payload, sort_keys=True)
    else:
        out = f"{args.name} = {series}"
    _emit(out, args.out)
    return 0


def _run_case(family, dim, args):
    kwargs = dict(n_half=args.order_half or 6, rank_n=args.rank_n)
    if family == "spin_sl2z":
        return anomaly.verify_sl2z(dim, **kwargs)
    if family == "spinc_witten":
        return anomaly.verify_spinc("witten_tl", dim, **kwargs)
    if family == "spinc_star":
        return anomaly.verify_spinc("star", dim, n_roots=args.n_roots, **kwargs)
    if family == "gamma_spin":
        return anomaly.gamma_pipeline("spin", dim, **kwargs)
    if family == "gamma_spinc_witten":
        return anomaly.gamma_pipeline("spinc_witten", dim, **kwargs)
    if family == "gamma_spinc_star":
        return anomaly.gamma_pipeline("spinc_star", dim, n_roots=args.n_roots, **kwargs)
    raise ValueError(family)


def cmd_verify(args):
    if args.family and args.family not in anomaly.FAMILIES:
        print(f"error: unknown family {args.family!r}", file=sys.stderr)
        return 2
    if (args.dim is None) != (args.family is None):
        print("error: --dim and --family must be given together", file=sys.stderr)
        return 2
    if args.rank_n % 2 or args.rank_n < 2:
        print("error: --rank-N must be a positive even integer", file=sys.stderr)
        return 2
    if args.order_half is not None and args.order_half < 2:
        print("error: --order-half must be at least 2", file=sys.stderr)
        return 2
    if args.dim is not None:
        cases = [(args.family, args.dim)]
    else:
        cases = list(DEFAULT_CASES)
        if args.heavy:
            cases += HEAVY_CASES
    reports = []
    for family, dim in cases:
        try:
            reports.append(_run_case(family, dim, args))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    lines = []
    all_pass = True
    for rep in reports:
        all_pass = all_pass and rep.passed
        if args.format == "json":
            lines.append(rep.to_json())
        else:
            stat = "PASS" if rep.passed else "FAIL"
            detail = ""
            if "constants" in rep.fields and rep.fields["constants"]:
                consts = ", ".join(str(v) for v in rep.fields["constants"].values())
                detail = f" constants [{consts}]"
            if "h_list" in rep.fields:
                detail = f" h0={rep.fields['h_list'][0]}"
            lines.append(f"{rep.case:28s} {stat}{detail}")
    _emit("\n".join(lines), args.out)
    return 0 if all_pass else 1


def cmd_selftest(args):
    theta_tol = args.tolerance if args.tolerance else 1e-9
    mf_tol = max(args.tolerance, 1e-6) if args.tolerance else 1e-6
    samples = theta.default_law_samples(args.samples)
    results = theta.transformation_law_suite(samples, theta_tol, args.n_factors)
    lines = []
    ok = True
    for name, dev, passed in results:
        ok = ok and passed
        lines.append(f"theta law {name:12s} max dev {dev:.3e} {'ok' if passed else 'FAIL'}")
    taus = [tau for _, tau in samples[:10]]
    for weight in (4, 6):
        form = modforms.eisenstein(weight, 40)
        rep = modforms.numeric_modularity_check(form, taus, mf_tol)
        ok = ok and rep["passed"]
        lines.append(
            f"E{weight} modularity     max dev {rep['max_dev']:.3e} {'ok' if rep['passed'] else 'FAIL'}"
        )
    rep = modforms.delta_eps_s_check(taus, mf_tol)
    ok = ok and rep["passed"]
    lines.append(
        f"delta/eps S-law    max dev {rep['max_dev']:.3e} {'ok' if rep['passed'] else 'FAIL'}"
    )
    exact_ok = _exact_property_checks()
    ok = ok and exact_ok
    lines.append(f"exact properties   {'ok' if exact_ok else 'FAIL'}")
    if not ok:
        lines.append(
            "selftest failed: if deviations sit near the truncation floor, raise"
            f" --n-factors (currently {args.n_factors}) or relax --tolerance"
        )
    _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def _exact_property_checks():
    """Small exact suite: ring axioms, S_t Lam_(-t) = 1, tau-shift involution."""
    from .series import QQ, QSeries

    a = QSeries(QQ, {0: 1, 1: Fraction(2, 3), 3: -1}, 6)
    b = QSeries(QQ, {0: Fraction(1, 2), 2: 5}, 6)
    c = QSeries(QQ, {1: 7, 4: Fraction(-3, 4)}, 6)
    ok = (a * b) * c == a * (b * c)
    ok = ok and a * (b + c) == a * b + a * c
    ok = ok and a.tau_shift().tau_shift() == a
    st_lam = kring.symm_series("T", 8) * kring.lambda_series("T", -1, False, 8)
    ok = ok and st_lam == QSeries.one(kring.KRING, 8)
    return ok


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oddgenus",
        description="Exact q-series engine and cancellation-identity verifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="print a named series expansion")
    pe.add_argument("name")
    pe.add_argument("--order", type=int, default=int(os.environ.get("ODDGENUS_ORDER", 3)),
                    help="highest q power (env ODDGENUS_ORDER overrides the default)")
    pe.add_argument("--order-half", type=int, dest="order_half",
                    help="exclusive truncation bound in powers of q^(1/2)")
    pe.add_argument("--degree-cap", type=int, default=8)
    pe.add_argument("--format", choices=("json", "text"), default="text")
    pe.add_argument("--out")
    pe.set_defaults(func=cmd_expand)

    pv = sub.add_parser("verify", help="run theorem verifications")
    pv.add_argument("--family", choices=anomaly.FAMILIES)
    pv.add_argument("--dim", type=int)
    pv.add_argument("--order-half", type=int, dest="order_half",
                    default=_default_order())
    pv.add_argument("--rank-N", type=int, dest="rank_n", default=8)
    pv.add_argument("--n-roots", type=int, dest="n_roots")
    pv.add_argument("--heavy", action="store_true", help="include dims 15/19/23 (and 17)")
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.add_argument("--out")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("selftest", help="numeric transformation-law suite")
    ps.add_argument("--tolerance", type=float)
    ps.add_argument("--samples", type=int, default=20)
    ps.add_argument("--n-factors", type=int, dest="n_factors", default=40)
    ps.add_argument("--out")
    ps.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
