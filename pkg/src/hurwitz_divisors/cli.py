"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (excluded cases, empty or
tied searches, missing chain data, ``gate --strict`` rejections), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from hurwitz_divisors import acceptable as acc
from hurwitz_divisors import boundary as bd
from hurwitz_divisors import coverclass as cvc
from hurwitz_divisors import p1bundles as p1
from hurwitz_divisors.errors import DomainError, MissingChainDataError, TieError
from hurwitz_divisors.serialize import ChainFileError, emit, load_chain_file, table_records


CONVENTION_BANNER = (
    "note: no --chain-file given; chain data filled by default conventions "
    "m(mu) = lcm(mu), delta constant 0, e half-step (m/2, ..., 1/2, 0)"
)


class UsageError(Exception):
    pass


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, required=True, help="degree of the cover")
    common.add_argument("--g", type=int, required=True, help="genus of the covering curve")
    common.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    common.add_argument("--condition3", choices=("gap", "literal"), default="gap")

    parser = argparse.ArgumentParser(
        prog="hurwitz-divisors",
        description="Splitting types, acceptable tuples and boundary coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub.add_parser("decompose", parents=[common], help="g = k(d-1) + s and b")
    sub.add_parser("splitting", parents=[common], help="pushforward and cokernel types")
    p = sub.add_parser("cohomology", parents=[common], help="h0/h1 of the twisted pushforward")
    p.add_argument("--twist", type=int, default=None, help="twist by O(t); default k")
    p = sub.add_parser("acceptable", parents=[common], help="list acceptable tuples")
    p.add_argument("--a1", type=int, default=None)
    p = sub.add_parser("maximize", parents=[common], help="weighted-sum maximizer")
    p.add_argument("--a1", type=int, default=None, help="first entry; default k")
    p = sub.add_parser("gate", parents=[common], help="divisorial existence gate")
    p.add_argument("--strict", action="store_true", help="exit 1 when the gate rejects")
    sub.add_parser("greedy", parents=[common], help="greedy divisor dimension ledger")
    sub.add_parser("strata", parents=[common], help="canonical boundary labels")
    p = sub.add_parser("sigma", parents=[common], help="one boundary coefficient")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--mu", required=True, help='partition of d, e.g. "2,1"')
    p.add_argument("--m", type=int, default=None, help="override the chain length")
    p.add_argument("--chain-file", default=None)
    p = sub.add_parser("table", parents=[common], help="sigma over all strata")
    p.add_argument("--chain-file", default=None)
    return parser


def _parse_mu(text: str, d: int) -> bd.Partition:
    try:
        raw = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"malformed partition string {text!r}") from None
    if not raw or any(x < 1 for x in raw):
        raise UsageError(f"malformed partition string {text!r}")
    ordered = sorted(raw, reverse=True)
    if ordered != raw:
        _note(f"warning: partition {text} reordered to {','.join(map(str, ordered))}")
    mu = bd.Partition(tuple(ordered))
    if mu.d != d:
        raise UsageError(f"partition {mu} does not sum to d={d}")
    return mu


def _chain_data(path: str, cc: cvc.CoverClass) -> dict[str, bd.ChainData]:
    try:
        return load_chain_file(path, cc)
    except OSError as exc:
        raise UsageError(f"cannot read chain file: {exc}") from None
    except ChainFileError as exc:
        raise UsageError(f"invalid chain file: {exc}") from None


def _type_row(name: str, t: p1.SplittingType) -> dict[str, Any]:
    return {
        "bundle": name,
        "type": str(t),
        "rank": t.rank(),
        "degree": t.degree(),
        "h0": p1.h0(t),
        "h1": p1.h1(t),
        "balanced": p1.is_balanced(t),
        "minimal_sections": p1.is_minimal_sections(t),
    }


def dispatch(args: argparse.Namespace) -> tuple[list[dict[str, Any]], list[str], dict[str, Any], int]:
    """Run one command; returns ``(records, columns, meta, exit_status)``."""
    command = args.command
    d, g = args.d, args.g
    meta: dict[str, Any] = {"command": command, "d": d, "g": g}
    cfg = acc.AcceptabilityConfig(acc.Condition3(args.condition3))

    if command == "gate":
        reason = cvc.gate_reason(d, g)
        rec = {"d": d, "g": g, "divisorial": reason is None, "reason": reason or ""}
        status = 1 if (reason and args.strict) else 0
        return [rec], ["d", "g", "divisorial", "reason"], meta, status

    cc = cvc.decompose(d, g)

    if command == "decompose":
        rec = {"d": cc.d, "g": cc.g, "k": cc.k, "s": cc.s, "b": cc.b}
        return [rec], list(rec), meta, 0

    if command == "splitting":
        generic = cvc.generic_pushforward(cc)
        with_d = cvc.balanced_pushforward_with_divisor(cc)
        coker = cvc.cokernel_dual_type(with_d)
        rows = [
            _type_row("generic_pushforward", generic),
            _type_row("generic_pushforward_twisted_k", p1.twist(generic, cc.k)),
            _type_row("pushforward_with_divisor", with_d),
            _type_row("cokernel_dual", coker),
            _type_row("cokernel_dual_twisted", p1.twist(coker, -(cc.k + 1))),
        ]
        if cc.s <= cc.d - 4:
            rows.append(_type_row("case1_pushforward", cvc.special_pushforward_case1(cc)))
        return rows, list(rows[0]), meta, 0

    if command == "cohomology":
        shift = cc.k if args.twist is None else args.twist
        t = p1.twist(cvc.generic_pushforward(cc), shift)
        h0, h1 = cvc.twisted_section_counts(cc, shift)
        rec = {"twist": shift, "type": str(t), "h0": h0, "h1": h1}
        return [rec], list(rec), meta, 0

    if command == "acceptable":
        rows = [
            {"tuple": t, "weight": acc.weighted_sum(t)}
            for t in acc.enumerate_acceptable(cc, cfg, args.a1)
        ]
        return rows, ["tuple", "weight"], meta, 0

    if command == "maximize":
        a1 = cc.k if args.a1 is None else args.a1
        t = acc.maximize(cc, a1, cfg)
        rec = {"d": d, "g": g, "a1": a1, "tuple": t, "weight": acc.weighted_sum(t)}
        return [rec], list(rec), meta, 0

    if command == "greedy":
        traj = cvc.greedy_trajectory(cc)
        rec = {"s": cc.s, "b": cc.b, "steps": traj.steps, "residual_degree": traj.residual_degree}
        return [rec], list(rec), meta, 0

    if command == "strata":
        rows = [{"j": lab.j, "mu": str(lab.mu), "n": lab.mu.n} for lab in bd.enumerate_strata(cc)]
        return rows, ["j", "mu", "n"], meta, 0

    if command == "sigma":
        mu = _parse_mu(args.mu, d)
        label = bd.canonicalize(args.j, mu, cc.b)
        if args.chain_file:
            chain = bd.mapping_source(_chain_data(args.chain_file, cc))(label)
            if args.m is not None and args.m != chain.m:
                raise UsageError("--m conflicts with the chain file entry")
        else:
            _note(CONVENTION_BANNER)
            chain = bd.default_chain(mu, args.m)
        value = bd.sigma(cc, args.j, mu, chain)
        rec = {
            "j": args.j,
            "mu": str(mu),
            "m": chain.m,
            "sigma": value,
            "provenance": bd.format_provenance(chain.provenance),
        }
        return [rec], list(rec), meta, 0

    if command == "table":
        if args.chain_file:
            source = bd.mapping_source(_chain_data(args.chain_file, cc))
        else:
            _note(CONVENTION_BANNER)
            source = bd.default_source
        meta["b"] = cc.b
        return table_records(bd.sigma_table(cc, source)), ["j", "mu", "m", "sigma", "provenance"], meta, 0

    raise UsageError(f"unknown command {command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits 2 on usage errors
    try:
        records, columns, meta, status = dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cand in exc.candidates:
            print("  " + ",".join(map(str, cand)), file=sys.stderr)
        return 1
    except (DomainError, MissingChainDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(emit(records, columns, args.format, meta))
    return status


if __name__ == "__main__":
    sys.exit(main())
