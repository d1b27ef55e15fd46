"""
Command-line interface.

Exit codes: 0 success/pass/true, 1 fail/false, 2 usage error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import charpoly, crystal, geometry, standard
from .errors import HypothesisViolation, PreconditionError, ResourceBoundExceeded, ShapeError
from .weyl import Shape, Subword, Word, column_up_to, parse_subword

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SUITES = ("theorem1", "theorem2", "headstring", "recursion", "schubert")


@dataclass(frozen=True)
class RunConfig:
    shape: Shape
    subword: Subword
    seed: int = 0
    fmt: str = "text"
    max_l: int = standard.DEFAULT_MAX_L

    @property
    def word(self) -> Word:
        return self.shape.word

    @property
    def n(self) -> int:
        return self.shape.n


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None


def build_config(args: argparse.Namespace) -> RunConfig:
    try:
        word = Word(_ints(args.word, "word"), args.n)
        mult = _ints(args.mult, "mult") if args.mult is not None else (1,) * len(word)
        shape = Shape(word, mult)
        J = Subword.full(word) if args.subword is None else parse_subword(args.subword, word)
    except (PreconditionError, ShapeError) as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(shape, J, args.seed, args.format, args.max_l)


def _sizes(shape: Shape) -> list[int]:
    return [shape.word[k] for k in shape.slots()]


def cmd_generate(cfg: RunConfig, out) -> int:
    result = standard.generate_constructible(cfg.subword, cfg.shape)
    if cfg.fmt == "json":
        print(result.dumps(), file=out)
    else:
        for line in result.format_lines():
            print(line, file=out)
    return EXIT_OK


def _parse_shaped(text: str, shape: Shape) -> crystal.Tableau:
    try:
        tau = crystal.parse_tableau(text)
        standard.validate_tableau(tau, shape)
    except (PreconditionError, ShapeError) as exc:
        raise UsageError(str(exc)) from None
    return tau


def cmd_standard(cfg: RunConfig, tableau_text: str, out) -> int:
    tau = _parse_shaped(tableau_text, cfg.shape)
    verdict = standard.is_standard(tau, cfg.shape, cfg.subword)
    sizes = _sizes(cfg.shape)
    if cfg.fmt == "json":
        payload = {"tableau": crystal.format_tableau(tau, sizes), "standard": verdict.standard}
        if verdict.standard:
            payload["witness"] = list(verdict.witness)
        else:
            payload["residual"] = crystal.format_tableau(verdict.residual)
            payload["stuck_at"] = verdict.stuck_at
        print(json.dumps(payload), file=out)
    elif verdict.standard:
        print("true", file=out)
        print("witness " + ",".join(map(str, verdict.witness)), file=out)
    else:
        print("false", file=out)
        print("residual " + crystal.format_tableau(verdict.residual), file=out)
    return EXIT_OK if verdict.standard else EXIT_FAIL


def cmd_lift(cfg: RunConfig, tableau_text: str, out) -> int:
    tau = _parse_shaped(tableau_text, cfg.shape)
    nest = standard.find_lifting(tau, cfg.shape, cfg.subword, cfg.max_l)
    if nest is None:
        print("none", file=out)
        return EXIT_FAIL
    if cfg.fmt == "json":
        print(json.dumps({"nest": [list(J.positions()) for J in nest.subwords]}), file=out)
    else:
        print(str(nest), file=out)
    return EXIT_OK


def cmd_char(cfg: RunConfig, mode: str, out) -> int:
    n = cfg.n
    results = {}
    if mode in ("demazure", "both"):
        results["demazure"] = charpoly.demazure_character(cfg.subword, cfg.shape)
    if mode in ("tableau-sum", "both"):
        tableaux = standard.generate_constructible(cfg.subword, cfg.shape)
        results["tableau-sum"] = charpoly.set_character(tableaux, n)
    equal = None
    if mode == "both":
        equal = results["demazure"] == results["tableau-sum"]
    if cfg.fmt == "json":
        payload = {name: poly.to_json() for name, poly in results.items()}
        payload["dimension"] = next(iter(results.values())).at_ones()
        if equal is not None:
            payload["equal"] = equal
        print(json.dumps(payload), file=out)
    else:
        for name, poly in results.items():
            label = f"{name}: " if len(results) > 1 else ""
            print(f"{label}{poly}", file=out)
        if equal is not None:
            print("EQUAL" if equal else "UNEQUAL", file=out)
            print(f"dimension {results['demazure'].at_ones()}", file=out)
    return EXIT_FAIL if equal is False else EXIT_OK


def _suite(cfg: RunConfig, suite: str, points: int) -> tuple[bool, str]:
    shape, J = cfg.shape, cfg.subword
    if suite == "theorem1":
        tableaux = standard.generate_constructible(J, shape)
        dim = charpoly.demazure_character(J, shape).at_ones()
        ok, rank, used = geometry.certify_independence(
            tableaux.tableaux, shape, [J], max(points, len(tableaux)), cfg.seed)
        passed = ok and dim == len(tableaux)
        return passed, f"rank {rank} of {len(tableaux)} (seed {used}), character dimension {dim}"
    if suite == "theorem2":
        constructible = standard.generate_constructible_all(shape)
        liftable = standard.generate_liftable_all(shape, cfg.max_l)
        bad = [J for J in constructible if constructible[J].as_set() != liftable[J].as_set()]
        return not bad, f"{len(constructible) - len(bad)}/{len(constructible)} subwords agree"
    if suite == "headstring":
        sets = standard.generate_constructible_all(shape)
        bad = [J for J, T in sets.items() if not standard.check_headstring(T, cfg.n)]
        return not bad, f"{len(sets) - len(bad)}/{len(sets)} subwords have the head-string property"
    if suite == "recursion":
        if shape.first_support() is None:
            return True, "m = 0: nothing to check"
        subwords = list(Subword.all(shape.word))
        bad = [Jp for Jp in subwords if not standard.check_recursion(Jp, shape)]
        return not bad, f"{len(subwords) - len(bad)}/{len(subwords)} subwords satisfy the column recursion"
    if suite == "schubert":
        bad = [k for k in range(1, len(shape.word) + 1)
               if not geometry.schubert_image_check(J, k, points, cfg.seed)]
        kmax = [",".join(map(str, column_up_to(J, k, "max"))) for k in range(1, len(shape.word) + 1)]
        return not bad, f"image columns {' | '.join(kmax)}; failing positions {bad}"
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(cfg: RunConfig, suites: list[str], points: int, out) -> int:
    all_ok = True
    report = []
    for suite in suites:
        ok, detail = _suite(cfg, suite, points)
        all_ok = all_ok and ok
        report.append({"suite": suite, "pass": ok, "detail": detail})
    if cfg.fmt == "json":
        print(json.dumps(report), file=out)
    else:
        for row in report:
            print(f"{row['suite']}: {'PASS' if row['pass'] else 'FAIL'} ({row['detail']})", file=out)
    return EXIT_OK if all_ok else EXIT_FAIL


def crystal_edges(tableaux: standard.StandardSet, n: int) -> list[tuple[crystal.Tableau, crystal.Tableau, int]]:
    members = tableaux.as_set()
    edges = []
    for tau in tableaux:
        for i in range(1, n):
            down = crystal.lower(i, tau)
            if down is not None and down in members:
                edges.append((tau, down, i))
    return edges


def cmd_crystal(cfg: RunConfig, out) -> int:
    tableaux = standard.generate_constructible(cfg.subword, cfg.shape)
    sizes = _sizes(cfg.shape)
    name = {tau: crystal.format_tableau(tau, sizes) for tau in tableaux}
    print("digraph crystal {", file=out)
    for tau in tableaux:
        print(f'  "{name[tau]}";', file=out)
    for src, dst, i in crystal_edges(tableaux, cfg.n):
        print(f'  "{name[src]}" -> "{name[dst]}" [label="{i}"];', file=out)
    print("}", file=out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--word", required=True, help='letters, e.g. "1,2,1"')
    common.add_argument("--mult", help='multiplicities, e.g. "1,1,1" (default all ones)')
    common.add_argument("--n", type=int, required=True, help="matrix size of GL(n)")
    common.add_argument("--subword", help='positions, e.g. "{1,3}" (default the whole word)')
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--max-l", type=int, default=standard.DEFAULT_MAX_L,
                        help="length bound for the brute-force nest oracle")

    parser = argparse.ArgumentParser(prog="bott-samelson", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("generate", parents=[common], help="list the standard tableaux")
    p = sub.add_parser("standard", parents=[common], help="test a tableau for standardness")
    p.add_argument("tableau", help='e.g. "2*2,3*1"; "∅" for the empty tableau')
    p = sub.add_parser("lift", parents=[common], help="print a reduced nest lifting a tableau")
    p.add_argument("tableau")
    p = sub.add_parser("char", parents=[common], help="print characters")
    p.add_argument("--mode", choices=("demazure", "tableau-sum", "both"), default="both")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), action="append",
                   help="may be repeated (default: all)")
    p.add_argument("--points", type=int, default=20, help="sampled points per component")
    p.add_argument("--dump-csv", help="write the theorem1 evaluation matrix to this file")
    sub.add_parser("crystal", parents=[common], help="export the crystal graph as DOT")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        if args.command == "generate":
            return cmd_generate(cfg, out)
        if args.command == "standard":
            return cmd_standard(cfg, args.tableau, out)
        if args.command == "lift":
            return cmd_lift(cfg, args.tableau, out)
        if args.command == "char":
            return cmd_char(cfg, args.mode, out)
        if args.command == "verify":
            suites = args.suite or ["all"]
            if "all" in suites:
                suites = list(SUITES)
            if args.dump_csv:
                T = standard.generate_constructible(cfg.subword, cfg.shape)
                rows = geometry.evaluation_matrix(T.tableaux, cfg.shape, [cfg.subword],
                                                  max(args.points, len(T)), cfg.seed)
                geometry.write_csv(rows, args.dump_csv)
            return cmd_verify(cfg, suites, args.points, out)
        if args.command == "crystal":
            return cmd_crystal(cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBoundExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (PreconditionError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
