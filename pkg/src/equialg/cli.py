"""Batch command-line front end: enumeration, Eckmann-Hilton checks, and
connectivity reports, with deterministic file output.

Exit codes: 0 success, 1 invalid input, 2 resource guard breached,
3 theorem violation (falsifying evidence; never a user error).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .connectivity import (conn_join_bound, disk_conn_c2,
                           non_additivity_witness)
from .errors import (CutoffOverflowError, GuardExceededError,
                     TheoremViolation, ValidationError)
from .groups import FiniteGroup, cyclic_group
from .indexing import (default_cutoff, enumerate_systems,
                       enumerate_transfer_systems)
from .magmas import (eckmann_hilton, enumerate_interchanging_pairs,
                     enumerate_semi_mackey, pair_from_json,
                     pair_of_semi_mackey, canonical_pair_key)
from .poset import fingerprint

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_THEOREM = 3


@dataclass
class RunConfig:
    """Resolved options shared by the subcommands."""

    group_spec: str = "cyclic:2"
    cutoff: int | None = None
    filter: str = "all"
    output: str | None = None
    format: str = "text"
    max_points: int = 100_000
    max_carrier: int = 4
    norm_axiom: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.format not in ("json", "dot", "text"):
            raise ValidationError(f"unknown format {self.format!r}")
        if self.max_points <= 0 or self.max_carrier <= 0 or self.workers <= 0:
            raise ValidationError("guards and worker count must be positive")

    def resolve_group(self) -> FiniteGroup:
        spec = self.group_spec
        if spec.startswith("cyclic:"):
            try:
                return cyclic_group(int(spec.split(":", 1)[1]))
            except ValueError as exc:
                raise ValidationError(f"bad cyclic order in {spec!r}") from exc
        path = Path(spec)
        if not path.is_file():
            raise ValidationError(f"group spec {spec!r} is neither cyclic:n "
                                  "nor a readable table file")
        return FiniteGroup.from_json(path.read_text())


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_enumerate(cfg: RunConfig, transfer_systems: bool = False) -> int:
    group = cfg.resolve_group()
    if transfer_systems:
        poset = enumerate_transfer_systems(group)
        kind = "transfer systems"
    else:
        poset = enumerate_systems(group, cfg.cutoff, cfg.filter)
        kind = f"weak indexing systems ({cfg.filter})"
    cutoff = cfg.cutoff or default_cutoff(group)
    print(f"{group.name}: {len(poset)} {kind}"
          + ("" if transfer_systems else f" at cutoff {cutoff}"))
    if cfg.format == "dot":
        _emit(cfg, poset.to_dot("nodes"))
    elif cfg.format == "json":
        _emit(cfg, poset.to_json())
    elif cfg.output:
        _emit(cfg, poset.to_json())
    return EXIT_OK


def cmd_eh_check(cfg: RunConfig, pair_file: str | None, sweep, p: int) -> int:
    if pair_file is not None:
        pair = pair_from_json(Path(pair_file).read_text(),
                              norm_axiom=cfg.norm_axiom)
        sm = eckmann_hilton(pair, norm_axiom=cfg.norm_axiom)
        print(f"PASS: pair of size ({pair.base.size_e},{pair.base.size_g}) "
              "lifts to a semi-Mackey functor")
        if cfg.output:
            _emit(cfg, json.dumps({"verdict": "PASS", "p": p,
                                   "t": list(sm.t)}, sort_keys=True))
        return EXIT_OK
    max_e, max_g = sweep
    if max_e > cfg.max_carrier or max_g > cfg.max_carrier:
        raise GuardExceededError("sweep bounds exceed the carrier guard")
    pairs = enumerate_interchanging_pairs(p, max_e, max_g,
                                          norm_axiom=cfg.norm_axiom)
    for pair in pairs:
        eckmann_hilton(pair, norm_axiom=cfg.norm_axiom)
    sms = enumerate_semi_mackey(p, max_e, max_g)
    pair_keys = sorted(canonical_pair_key(q) for q in pairs)
    sm_keys = sorted(canonical_pair_key(pair_of_semi_mackey(s)) for s in sms)
    bijection = pair_keys == sm_keys if cfg.norm_axiom else \
        set(pair_keys) <= set(sm_keys)
    print(f"sweep p={p} bounds ({max_e},{max_g}): {len(pairs)} interchanging "
          f"pairs, {len(sms)} semi-Mackey functors, 0 violations")
    print(f"pair/semi-Mackey correspondence: "
          f"{'bijective' if pair_keys == sm_keys else 'pairs embed'}")
    if not bijection:
        raise TheoremViolation("sweep does not embed into semi-Mackey functors")
    if cfg.output:
        _emit(cfg, json.dumps({"pairs": len(pairs), "semi_mackey": len(sms),
                               "violations": 0}, sort_keys=True))
    return EXIT_OK


def _resolve_node(poset, labels, spec: str):
    matches = [k for k, lab in enumerate(labels) if lab.startswith(spec)]
    if spec == "trivial":
        matches = poset.minimal()
    elif spec == "complete":
        matches = poset.maximal()
    if len(matches) != 1:
        raise ValidationError(
            f"node spec {spec!r} matches {len(matches)} nodes "
            "(use a fingerprint prefix, 'trivial', or 'complete')")
    return matches[0]


def cmd_conn(cfg: RunConfig, all_pairs: bool, ev, ev_set: str | None,
             level: str, ev_witness, nodes=None) -> int:
    if ev_witness is not None:
        rep = non_additivity_witness(*ev_witness)
        print(f"lhs bound {rep['lhs_bound']} < rhs {rep['rhs']}: "
              f"{rep['strict']}  [{rep['provenance']}]")
        if cfg.output:
            _emit(cfg, json.dumps({k: str(v) for k, v in rep.items()},
                                  sort_keys=True))
        return EXIT_OK
    if ev is not None:
        a, b = ev
        if ev_set is None:
            raise ValidationError("--ev needs --set")
        parts = [int(x) for x in ev_set.split(",")]
        if level == "e":
            if len(parts) != 1:
                raise ValidationError("level e arity is a single count")
            arity = ("e", parts[0])
        else:
            if len(parts) != 2:
                raise ValidationError("level G arity is 'fixed,free'")
            arity = ("G", parts[0], parts[1])
        value = disk_conn_c2(a, b, arity)
        print(f"conn({a}+{b}s at {arity}) = {value}")
        if cfg.output:
            _emit(cfg, json.dumps({"value": str(value)}, sort_keys=True))
        return EXIT_OK
    if not all_pairs and nodes is None:
        raise ValidationError(
            "conn needs --all-pairs, --nodes, --ev, or --ev-witness")
    group = cfg.resolve_group()
    poset = enumerate_systems(group, cfg.cutoff, "almost_unital")
    labels = poset.labels()
    if nodes is not None:
        i_node = poset.nodes[_resolve_node(poset, labels, nodes[0])]
        j_node = poset.nodes[_resolve_node(poset, labels, nodes[1])]
        rep = conn_join_bound(i_node, j_node, poset)
        print(f"{group.name}: join bound "
              f"{'holds' if rep.holds else 'FAILS'}; "
              f"{len(rep.strict_witnesses)} strict witnesses")
        table = {lab: {"lhs": str(rep.lhs[k]), "rhs": str(rep.rhs[k])}
                 for k, lab in enumerate(labels)}
        if cfg.output:
            _emit(cfg, json.dumps(table, sort_keys=True,
                                  separators=(",", ":")))
        if not rep.holds:
            raise TheoremViolation("join bound failed")
        return EXIT_OK
    failures = 0
    lines = []
    table = {}
    for i_node in poset.nodes:
        for j_node in poset.nodes:
            rep = conn_join_bound(i_node, j_node, poset)
            if not rep.holds:
                failures += 1
            key = f"{fingerprint(i_node.value_key())}*" \
                  f"{fingerprint(j_node.value_key())}"
            table[key] = {"holds": rep.holds,
                          "strict": [labels[k] for k in rep.strict_witnesses]}
            if rep.strict_witnesses:
                lines.append(f"  strict at {key}: "
                             + ",".join(labels[k] for k in rep.strict_witnesses))
    print(f"{group.name}: join bound checked on {len(poset)}^2 pairs, "
          f"{failures} failures")
    for line in lines[:20]:
        print(line)
    if cfg.output:
        _emit(cfg, json.dumps(table, sort_keys=True, separators=(",", ":")))
    if failures:
        raise TheoremViolation(f"join bound failed on {failures} pairs")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equialg",
        description="finite G-set calculus, weak indexing systems, and "
                    "Eckmann-Hilton checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", default="cyclic:2",
                       help="cyclic:n or a path to a group JSON table")
        p.add_argument("--cutoff", type=int, default=None)
        p.add_argument("--output", default=None)
        p.add_argument("--format", default="text",
                       choices=["json", "dot", "text"])
        p.add_argument("--max-points", type=int, default=100_000)
        p.add_argument("--max-carrier", type=int, default=4)
        p.add_argument("--norm-axiom", action="store_true",
                       help="read multiplication-by-p as the orbit product")
        p.add_argument("--workers", type=int,
                       default=int(os.environ.get("EQUIALG_WORKERS", "1")),
                       help="worker count (execution is sequential and "
                            "deterministic; the flag sizes future partitions)")

    p_enum = sub.add_parser("enumerate", help="enumerate indexing posets")
    common(p_enum)
    p_enum.add_argument("--filter", default="all",
                        choices=["all", "unital", "almost_unital"])
    p_enum.add_argument("--transfer-systems", action="store_true")

    p_eh = sub.add_parser("eh-check", help="Eckmann-Hilton verification")
    common(p_eh)
    p_eh.add_argument("--pair", default=None, help="pair JSON file")
    p_eh.add_argument("--sweep", nargs=2, type=int, metavar=("MAX_E", "MAX_G"))
    p_eh.add_argument("--p", type=int, default=2)

    p_conn = sub.add_parser("conn", help="connectivity reports")
    common(p_conn)
    p_conn.add_argument("--all-pairs", action="store_true")
    p_conn.add_argument("--nodes", nargs=2, metavar=("I", "J"),
                        help="two node fingerprints (or trivial/complete)")
    p_conn.add_argument("--ev", nargs=2, type=int, metavar=("A", "B"))
    p_conn.add_argument("--set", dest="ev_set", default=None)
    p_conn.add_argument("--level", default="G", choices=["e", "G"])
    p_conn.add_argument("--ev-witness", nargs=2, type=int,
                        metavar=("A_PRIME", "B"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(group_spec=args.group, cutoff=args.cutoff,
                        filter=getattr(args, "filter", "all"),
                        output=args.output, format=args.format,
                        max_points=args.max_points,
                        max_carrier=args.max_carrier,
                        norm_axiom=args.norm_axiom, workers=args.workers)
        if args.command == "enumerate":
            code = cmd_enumerate(cfg, transfer_systems=args.transfer_systems)
        elif args.command == "eh-check":
            if args.pair is None and args.sweep is None:
                raise ValidationError("eh-check needs --pair or --sweep")
            code = cmd_eh_check(cfg, args.pair, args.sweep, args.p)
        else:
            code = cmd_conn(cfg, args.all_pairs, args.ev, args.ev_set,
                            args.level, args.ev_witness, nodes=args.nodes)
        return code
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (GuardExceededError, CutoffOverflowError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
