"""Command-line front end.

Exit status: 0 on success, 1 when a check or verification fails (the
witness is printed), 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .core import (
    AdditiveMeasure,
    MaxitiveMeasure,
    MeasureError,
    SetFunction,
    is_additive,
    is_maxitive,
    is_normed,
    is_two_valued,
    induced_delta,
    max_disjoint_positive_family,
)
from .documents import dump_density, dump_measure, dump_table, parse_density, parse_measure
from .harness import TrialConfig, run_trials, verify_corollary, verify_representation
from .integral import shilkret_integral, shilkret_oracle
from .radon_nikodym import NotAbsolutelyContinuous, density
from .variation import disjoint_variation, variation_oracle, variation_oracle_table


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_measure(path: str, want: str):
    """Load a document and promote it to the requested measure kind."""
    mu = parse_measure(_read(path))
    if isinstance(mu, SetFunction):
        check = is_maxitive if want == "maxitive" else is_additive
        verdict = check(mu)
        if not verdict:
            a, b = verdict.witness
            fmt = mu.space.format_set
            raise UsageError(f"{path}: table is not {want}, witness ({{{fmt(a)}}}, {{{fmt(b)}}})")
        atoms = [mu(1 << i) for i in range(mu.space.n)]
        return MaxitiveMeasure(mu.space, atoms) if want == "maxitive" else AdditiveMeasure(mu.space, atoms)
    expected = MaxitiveMeasure if want == "maxitive" else AdditiveMeasure
    if not isinstance(mu, expected):
        raise UsageError(f"{path}: expected a {want} measure")
    return mu


def _braces(space, mask: int) -> str:
    return "{" + space.format_set(mask) + "}"


def cmd_check(args, out) -> int:
    mu = parse_measure(_read(args.file))
    space = mu.space
    if isinstance(mu, SetFunction):
        status = 1
        for name, check in (("maxitive", is_maxitive), ("additive", is_additive)):
            verdict = check(mu)
            if verdict:
                status = 0
                print(f"{name}: yes", file=out)
            else:
                a, b = verdict.witness
                print(f"{name}: no, witness ({_braces(space, a)}, {_braces(space, b)})", file=out)
        return status
    if isinstance(mu, MaxitiveMeasure):
        print("maxitive: yes", file=out)
        print(f"total: {mu(space.full)}", file=out)
        print(f"normed: {'yes' if is_normed(mu) else 'no'}", file=out)
        print(f"two-valued: {'yes' if is_two_valued(mu) else 'no'}", file=out)
    else:
        print("additive: yes", file=out)
        print(f"total: {mu(space.full)}", file=out)
    print(f"max disjoint positive family: {max_disjoint_positive_family(mu)}", file=out)
    return 0


def cmd_integrate(args, out) -> int:
    nu = _load_measure(args.nu, "maxitive")
    c = parse_density(_read(args.density))
    B = nu.space.parse_set(args.set)
    value = shilkret_oracle(c, nu, B) if args.oracle else shilkret_integral(c, nu, B)
    print(value, file=out)
    return 0


def cmd_variation(args, out) -> int:
    tau = _load_measure(args.tau, "maxitive")
    if args.set is not None:
        B = tau.space.parse_set(args.set)
        value = variation_oracle(tau, B) if args.oracle else disjoint_variation(tau)(B)
        print(value, file=out)
    elif args.oracle:
        out.write(dump_table(SetFunction(tau.space, variation_oracle_table(tau))))
    else:
        out.write(dump_measure(disjoint_variation(tau)))
    return 0


def cmd_induce(args, out) -> int:
    m = _load_measure(args.m, "additive")
    out.write(dump_measure(induced_delta(m)))
    return 0


def cmd_density(args, out) -> int:
    tau = _load_measure(args.tau, "maxitive")
    nu = _load_measure(args.nu, "maxitive")
    try:
        c = density(tau, nu)
    except NotAbsolutelyContinuous as exc:
        print(f"not absolutely continuous: witness {exc.witness}", file=out)
        print(exc, file=sys.stderr)
        return 1
    out.write(dump_density(c))
    return 0


def _section(title: str, body: str) -> str:
    return f"# {title}\n{body}"


def cmd_verify(args, out) -> int:
    tau = _load_measure(args.tau, "maxitive")
    space = tau.space
    verdict = verify_representation(tau)
    details = verdict.details
    out.write(_section("tau", dump_measure(tau)) + "\n")
    if "m" in details:
        out.write(_section("m (disjoint variation)", dump_measure(details["m"])) + "\n")
    if "delta_m" in details:
        out.write(_section("delta_m", dump_measure(details["delta_m"])) + "\n")
    if "c" in details:
        out.write(_section("c (density of tau w.r.t. delta_m)", dump_density(details["c"])) + "\n")
    ok = verdict.ok
    if verdict:
        print("representation: PASS", file=out)
    else:
        w = verdict.witness
        shown = _braces(space, w) if isinstance(w, int) else str(w)
        print(f"representation: FAIL at stage {verdict.stage}, witness {shown}", file=out)
    if is_two_valued(tau):
        corollary = verify_corollary(tau)
        ok = ok and corollary.ok
        if corollary:
            print("corollary (tau = delta_m): PASS", file=out)
        else:
            print(f"corollary (tau = delta_m): FAIL, witness {_braces(space, corollary.witness)}", file=out)
    else:
        print("corollary (tau = delta_m): skipped, tau is not two-valued", file=out)
    return 0 if ok else 1


def cmd_fuzz(args, out) -> int:
    try:
        config = TrialConfig(seed=args.seed, trials=args.trials, max_atoms=args.max_atoms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_trials(config)
    out.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxitive",
        description="Exact maxitive measures, Shilkret integrals and densities on finite spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a measure document")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("integrate", help="Shilkret integral of a density over a set")
    p.add_argument("--nu", required=True, help="maxitive measure document")
    p.add_argument("--density", required=True, help="density document")
    p.add_argument("--set", required=True, help='comma-joined atom labels, "" for the empty set')
    p.add_argument("--oracle", action="store_true", help="evaluate the supremum from its definition")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("variation", help="disjoint variation of a maxitive measure")
    p.add_argument("--tau", required=True)
    p.add_argument("--set", help="print the value on this set only")
    p.add_argument("--oracle", action="store_true", help="maximize over all partitions")
    p.set_defaults(func=cmd_variation)

    p = sub.add_parser("induce", help="two-valued measure induced by an additive measure")
    p.add_argument("--m", required=True)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("density", help="density of tau with respect to nu")
    p.add_argument("--tau", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="run the essential-supremum representation pipeline")
    p.add_argument("--tau", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="seeded randomized verification run")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-atoms", type=int, default=6)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, MeasureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
