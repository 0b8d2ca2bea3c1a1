"""``liebranch`` command line: run verification suites and list branching rules."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .branching import _tidy
from .verify import BRANCH_RULES, Config, cmd_branch, cmd_identities, cmd_oracle, cmd_tables

DEPTH_FLAGS = ("depth_e6", "depth_e7", "depth_e8", "depth_lemma", "depth_oracle", "depth_e8_oracle")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default 1)")
    p.add_argument("--output", "-o", default=None, help="write the report to a file instead of stdout")


def _add_depths(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("depth caps")
    for name in DEPTH_FLAGS:
        default = getattr(Config, name)
        g.add_argument("--" + name.replace("_", "-"), type=int, default=None, help=f"default {default}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liebranch", description=__doc__)
    parser.add_argument("--version", action="version", version=f"liebranch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="integrability exponents and restricted root data")
    _add_common(p)
    p = sub.add_parser("identities", help="invariant-dimension identities against their closed forms")
    _add_common(p)
    _add_depths(p)
    p = sub.add_parser("oracle", help="raw character-restriction sequences")
    _add_common(p)
    _add_depths(p)

    p = sub.add_parser("branch", help="list a branching rule with dimensions")
    p.add_argument("rule", choices=BRANCH_RULES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="rank parameter for the Levi rules")
    p.add_argument("--no-oracle", action="store_true", help="skip the character-restriction cross-check")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o", default=None)
    return parser


def _config(args) -> Config:
    overrides = {name: getattr(args, name, None) for name in DEPTH_FLAGS}
    overrides["jobs"] = args.jobs
    return Config.from_env(**overrides)


def _render_branch(listing, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "rule": listing.rule,
            "m": listing.m,
            "n": listing.n,
            "constituents": [{"weight": [str(x) for x in w], "dim": d} for w, d in listing.constituents],
            "total_dim": listing.total_dim,
            "source_dim": listing.source_dim,
            "oracle": listing.oracle_status,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = ["weight,dim"] + [f"\"{' '.join(str(x) for x in w)}\",{d}" for w, d in listing.constituents]
        return "\n".join(rows) + "\n"
    head = f"{listing.rule}" + (f" m={listing.m}" if listing.m is not None else "") + f" n={listing.n}"
    lines = [head]
    for w, d in listing.constituents:
        lines.append(f"  ({', '.join(str(x) for x in _tidy(w))})  dim {d}")
    lines.append(f"{len(listing.constituents)} constituents, total {listing.total_dim} (source {listing.source_dim})")
    lines.append(f"oracle: {listing.oracle_status}")
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "branch":
            listing = cmd_branch(args.rule, args.n, args.m, oracle=not args.no_oracle)
            _emit(_render_branch(listing, args.format), args.output)
            return 0 if listing.ok else 1
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    runner = {"tables": lambda: cmd_tables(cfg), "identities": lambda: cmd_identities(cfg), "oracle": lambda: cmd_oracle(cfg)}
    report = runner[args.command]()
    _emit(report.render(args.format), args.output)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
