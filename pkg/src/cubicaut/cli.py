"""Command line front end for the catalog and its verification battery.

Subcommands map onto the library one to one: `verify` runs claim bundles
and renders the structured report, `aut` recomputes one automorphism
group, `sing` certifies a singular locus (catalog entry or a polynomial
read from a file), `pr1` and `eliminations` run the symbolic condition
checks, and `catalog --list` prints the built-in entries.  Exit status is
0 when every executed check passed, 1 when some check failed, 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import FAMILY_TAGS, RING5, TAGS, catalog_build
from .dsl import parse_poly
from .groebner import DEFAULT_BUDGET
from .singular import (
    CertificationFailure,
    certify_singular_locus,
    classify_singularity,
    dual_degree_budget,
    find_rational_singular_points,
)
from .verify import (
    _check,
    _point_identify,
    all_pass,
    render_report,
    verify_all,
    verify_eliminations,
    verify_pr1,
    verify_table,
)

__all__ = ["cli_run", "main"]


def _emit(claims, report_path):
    text = render_report(claims)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as handle:
            handle.write(text)
        summary = sum(1 for c in claims if c.status == "fail")
        print(f"{len(claims)} claims, {summary} failed -> {report_path}")
    else:
        sys.stdout.write(text)
    return 0 if all_pass(claims) else 1


def _cmd_verify(args) -> int:
    if args.all:
        claims = verify_all(budget=args.budget)
    else:
        claims = verify_table([args.variety], budget=args.budget)
    return _emit(claims, args.report)


def _cmd_aut(args) -> int:
    from .aut import compute_automorphism_group

    entry = catalog_build(args.variety)
    points = list(entry.singular_points)
    claims = []

    group = compute_automorphism_group(entry.form, points)

    def order_check():
        ok = group.order == entry.aut_order
        return ok, f"computed order {group.order}, recorded {entry.aut_order}"

    def name_check():
        got = _point_identify(group, points)
        return got == entry.aut_name, (
            f"fingerprint {got}, recorded {entry.aut_name}")

    _check(claims, f"{entry.tag}:aut-order", order_check)
    _check(claims, f"{entry.tag}:aut-fingerprint", name_check)
    return _emit(claims, None)


def _read_form(path):
    with open(path, encoding="utf-8") as handle:
        lines = [ln.strip() for ln in handle]
    text = " ".join(ln for ln in lines if ln and not ln.startswith("#"))
    if not text:
        raise ValueError(f"no polynomial found in {path}")
    return parse_poly(text, RING5)


def _sing_claims(prefix, form, points, budget):
    claims = []

    def locus():
        try:
            cert = certify_singular_locus(form, points, budget, label=prefix)
        except CertificationFailure as exc:
            return False, f"{exc.half}: {exc.args[0]}"
        dim, degree = cert.dim_degree
        return True, (f"{len(points)} singular points certified "
                      f"(dim {dim}, degree {degree})")

    certified = _check(claims, f"{prefix}:singular-locus", locus)

    if certified:
        reports = []

        def types():
            for p in points:
                reports.append(classify_singularity(form, p, budget))
            text = "; ".join(f"{p}: {r.type} (mu={r.mu}, mu'={r.mu_section})"
                             for p, r in zip(points, reports))
            return True, text or "no singular points"

        _check(claims, f"{prefix}:types", types)

        def budget_left():
            return True, f"dual degree budget {dual_degree_budget(reports)}"

        if reports:
            _check(claims, f"{prefix}:degree-budget", budget_left)
    return claims


def _cmd_sing(args) -> int:
    if args.variety:
        entry = catalog_build(args.variety)
        claims = _sing_claims(entry.tag, entry.form,
                              list(entry.singular_points), args.budget)
    else:
        form = _read_form(args.input)
        points = find_rational_singular_points(form, height=args.height)
        claims = _sing_claims("input", form, points, args.budget)
    return _emit(claims, None)


def _cmd_pr1(args) -> int:
    return _emit(verify_pr1(budget=args.budget), None)


def _cmd_eliminations(args) -> int:
    return _emit(verify_eliminations(budget=args.budget), None)


def _cmd_catalog(args) -> int:
    for tag in TAGS:
        entry = catalog_build(tag)
        print(f"{tag:5s} s={entry.s:<2d} r={entry.r} p={entry.p:<2d} "
              f"aut={entry.aut_name} (order {entry.aut_order})")
    for tag in FAMILY_TAGS:
        entry = catalog_build(tag)
        params = ", ".join(entry.form.ring.domain.ring.names)
        print(f"{tag:8s} parameters {params}; {entry.s} assigned nodes")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicaut",
        description="certified invariants of the singular cubic catalog")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run claim bundles on the catalog")
    which = p_verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--variety", choices=TAGS, help="single table row")
    which.add_argument("--all", action="store_true",
                       help="all rows plus the symbolic batteries")
    p_verify.add_argument("--report", metavar="PATH",
                          help="write the report here instead of stdout")
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                          metavar="N", help="ideal engine pair budget")
    p_verify.set_defaults(func=_cmd_verify)

    p_aut = sub.add_parser("aut", help="recompute one automorphism group")
    p_aut.add_argument("--variety", choices=TAGS, required=True)
    p_aut.set_defaults(func=_cmd_aut)

    p_sing = sub.add_parser("sing", help="certify a singular locus")
    source = p_sing.add_mutually_exclusive_group(required=True)
    source.add_argument("--variety", choices=TAGS)
    source.add_argument("--input", metavar="FILE",
                        help="file with one polynomial in x0..x4")
    p_sing.add_argument("--height", type=int, default=5, metavar="N",
                        help="coordinate bound for the rational point search")
    p_sing.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        metavar="N")
    p_sing.set_defaults(func=_cmd_sing)

    p_pr1 = sub.add_parser("pr1",
                           help="coefficient conditions of the six-node family")
    p_pr1.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       metavar="N")
    p_pr1.set_defaults(func=_cmd_pr1)

    p_elim = sub.add_parser("eliminations",
                            help="coordinate eliminations and normalizations")
    p_elim.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        metavar="N")
    p_elim.set_defaults(func=_cmd_eliminations)

    p_cat = sub.add_parser("catalog", help="list built-in entries")
    p_cat.add_argument("--list", action="store_true", required=True)
    p_cat.set_defaults(func=_cmd_catalog)
    return parser


def cli_run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
