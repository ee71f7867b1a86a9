"""Command-line front door.

Subcommands: classify, betti, generate, isomorphic.  Output is JSON by
default (deterministic byte-for-byte for a fixed input, config, and
seed); exit codes are 0 for success, 1 for parse/input errors, and 2
for budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from dataclasses import field as _dc_field

from .characterize import (
    DEFAULT_CHAIN_PAIRS,
    DEFAULT_MATCHING_NODES,
    classification_report,
)
from .covers import DEFAULT_COVER_BUDGET
from .errors import BudgetExceeded, FlagPosetError, InvalidParameter, NotGraded
from .fields import GF2, FieldSpec, parse_field
from .generate import RandomPosetSpec, random_graded_poset
from .homology import (
    DEFAULT_BETTI_VARS,
    betti_polynomial_bruteforce,
    betti_polynomial_fast,
    full_betti_table,
)
from .ideals import flag_ideal
from .posets import (
    DEFAULT_ISO_BUDGET,
    GradedPoset,
    Poset,
    are_isomorphic,
    example_3_4,
    example_3_6,
    example_4_9,
    hom_rt_poset,
    letterplace_poset,
    parse_poset_text,
    pentagon,
    poset_to_text,
    rank_function,
)

BUDGET_NAMES = ("cover_enum", "betti_vars", "matching_nodes",
                "iso_elements", "chain_pairs")


@dataclass
class Config:
    field: FieldSpec = GF2
    budgets: dict = _dc_field(default_factory=lambda: {
        "cover_enum": DEFAULT_COVER_BUDGET,
        "betti_vars": DEFAULT_BETTI_VARS,
        "matching_nodes": DEFAULT_MATCHING_NODES,
        "iso_elements": DEFAULT_ISO_BUDGET,
        "chain_pairs": DEFAULT_CHAIN_PAIRS,
    })
    seed: int = 0
    fmt: str = "json"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", default="gf2",
                        help="coefficient field: gf2 | gfp:<p> | q")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", dest="fmt", default="json",
                        choices=["json", "csv", "text"])
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable text output")
    for name in BUDGET_NAMES:
        parser.add_argument(f"--budget-{name.replace('_', '-')}",
                            dest=f"budget_{name}", type=int, default=None)


def _config(args) -> Config:
    cfg = Config(field=parse_field(args.field), seed=args.seed, fmt=args.fmt)
    for name in BUDGET_NAMES:
        value = getattr(args, f"budget_{name}", None)
        if value is not None:
            if value < 1:
                raise InvalidParameter(f"budget {name} must be positive")
            cfg.budgets[name] = value
    return cfg


def _load_poset(args, cfg: Config) -> Poset:
    if getattr(args, "example", None):
        return _example(args.example)
    if not getattr(args, "file", None):
        raise InvalidParameter("need a poset file or --example")
    with open(args.file, encoding="utf-8") as handle:
        return parse_poset_text(handle.read())


def _example(token: str) -> Poset:
    named = {
        "pentagon": pentagon,
        "3.4": lambda: example_3_4().poset,
        "3.6": lambda: example_3_6().poset,
        "4.9": lambda: example_4_9().poset,
    }
    if token in named:
        out = named[token]()
        return out.poset if isinstance(out, GradedPoset) else out
    if token.startswith("hom:"):
        try:
            r, t = (int(x) for x in token[4:].split(","))
        except ValueError as exc:
            raise InvalidParameter(f"bad example token: {token}") from exc
        return hom_rt_poset(r, t).poset
    if token.startswith("letterplace:"):
        rest = token[len("letterplace:"):]
        n_str, _, path = rest.partition(",")
        try:
            n = int(n_str)
        except ValueError as exc:
            raise InvalidParameter(f"bad example token: {token}") from exc
        with open(path, encoding="utf-8") as handle:
            q = parse_poset_text(handle.read())
        return letterplace_poset(n, q).poset
    raise InvalidParameter(f"unknown example: {token}")


def _emit(payload, cfg: Config, out) -> None:
    if cfg.fmt == "json":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    elif cfg.fmt == "text":
        _emit_text(payload, out)
    else:
        raise InvalidParameter("csv output only applies to Betti tables")


def _emit_text(payload, out, indent=0) -> None:
    pad = "  " * indent
    if isinstance(payload, dict):
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)):
                out.write(f"{pad}{k}:\n")
                _emit_text(v, out, indent + 1)
            else:
                out.write(f"{pad}{k}: {v}\n")
    elif isinstance(payload, list):
        for v in payload:
            _emit_text(v, out, indent)
    else:
        out.write(f"{pad}{payload}\n")


def cmd_classify(args, out) -> int:
    cfg = _config(args)
    poset = _load_poset(args, cfg)
    report = classification_report(poset, cfg.field, cfg.budgets)
    if args.pretty and cfg.fmt == "json":
        cfg.fmt = "text"
    _emit(report, cfg, out)
    return 0


def cmd_betti(args, out) -> int:
    cfg = _config(args)
    poset = _load_poset(args, cfg)
    g = rank_function(poset)
    if g is None:
        raise NotGraded("Betti computations need a graded poset")
    ideal = flag_ideal(g)
    if args.multidegree is not None:
        a = [v for v in args.multidegree.split(",") if v]
        fast = betti_polynomial_fast(g, a, cfg.field) if (args.fast
                                                          or args.verify) else None
        brute = (betti_polynomial_bruteforce(ideal, a, cfg.field)
                 if (not args.fast or args.verify) else None)
        if args.verify and fast != brute:
            print(f"MISMATCH: fast {fast} vs brute-force {brute}",
                  file=sys.stderr)
            return 1
        poly = fast if fast is not None else brute
        payload = {"multidegree": sorted(a),
                   "betti_polynomial": {str(e): c
                                        for e, c in sorted(poly.coeffs.items())}}
        if args.verify:
            payload["verified"] = True
        _emit(payload, cfg, out)
        return 0
    from .homology import BettiTable, _lcm_lattice
    if args.verify:
        for a in _lcm_lattice(ideal):
            fast = betti_polynomial_fast(g, a, cfg.field)
            brute = betti_polynomial_bruteforce(ideal, a, cfg.field)
            if fast != brute:
                print(f"MISMATCH at {sorted(a)}: {fast} vs {brute}",
                      file=sys.stderr)
                return 1
    if args.fast:
        entries = {}
        for a in _lcm_lattice(ideal):
            poly = betti_polynomial_fast(g, a, cfg.field)
            for e, c in poly.coeffs.items():
                j = len(a) - e
                if j >= 0:
                    entries[(j, a)] = c
        table = BettiTable(ideal.variables, entries, cfg.field)
    else:
        table = full_betti_table(ideal, cfg.field, cfg.budgets["betti_vars"])
    if cfg.fmt == "csv":
        out.write(table.to_csv())
    else:
        payload = {"field": str(cfg.field),
                   "entries": [{"j": j, "A": sorted(a), "beta": b}
                               for (j, a), b in sorted(
                                   table.entries.items(),
                                   key=lambda kv: (kv[0][0], len(kv[0][1]),
                                                   sorted(kv[0][1])))]}
        if args.verify:
            payload["verified"] = True
        _emit(payload, cfg, out)
    return 0


def cmd_generate(args, out) -> int:
    cfg = _config(args)
    widths = tuple(int(w) for w in args.widths.split(","))
    spec = RandomPosetSpec(widths, args.edge_prob, cfg.seed)
    g = random_graded_poset(spec)
    text = poset_to_text(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        out.write(text)
    return 0


def cmd_isomorphic(args, out) -> int:
    cfg = _config(args)
    with open(args.file1, encoding="utf-8") as handle:
        p = parse_poset_text(handle.read())
    with open(args.file2, encoding="utf-8") as handle:
        q = parse_poset_text(handle.read())
    bijection = are_isomorphic(p, q, budget=cfg.budgets["iso_elements"])
    payload = {"isomorphic": bijection is not None,
               "bijection": bijection}
    _emit(payload, cfg, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagposet",
        description="Flag ideals of graded posets: classification and "
                    "multigraded Betti numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="full classification report")
    p_classify.add_argument("file", nargs="?")
    p_classify.add_argument("--example")
    _add_common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_betti = sub.add_parser("betti", help="Betti table or one polynomial")
    p_betti.add_argument("file", nargs="?")
    p_betti.add_argument("--example")
    p_betti.add_argument("--multidegree",
                         help="comma-separated element ids")
    p_betti.add_argument("--fast", action="store_true",
                         help="layer-product path (needs graded input)")
    p_betti.add_argument("--verify", action="store_true",
                         help="run both paths and require equality")
    _add_common(p_betti)
    p_betti.set_defaults(func=cmd_betti)

    p_gen = sub.add_parser("generate", help="seeded random graded poset")
    p_gen.add_argument("--widths", required=True,
                       help="comma-separated layer widths")
    p_gen.add_argument("--edge-prob", type=float, default=0.5)
    p_gen.add_argument("-o", "--output")
    _add_common(p_gen)
    p_gen.set_defaults(func=cmd_generate)

    p_iso = sub.add_parser("isomorphic",
                           help="cover-preserving bijection between two "
                                "poset files")
    p_iso.add_argument("file1")
    p_iso.add_argument("file2")
    _add_common(p_iso)
    p_iso.set_defaults(func=cmd_isomorphic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (FlagPosetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
