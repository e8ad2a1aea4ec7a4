"""Command line driver: ``houghton <subcommand> ...``.

Exit codes: 0 success, 2 input error, 3 unsupported configuration (for
example word synthesis in H_2), 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .element import Element, complexity
from .errors import BudgetExceeded, InputError, UnsupportedConfiguration
from .experiments import H2_LENGTH_CAP, H3_LENGTH_CAP, cohopf_report, distortion_report, free_report, growth_report
from .metric.search import DEFAULT_CAP, bfs_ball, geodesic
from .metric.synthesis import synthesize_word
from .morphisms.automorphisms import RayPermutation
from .morphisms.commensurations import NpElement, qi_witness, split_rays, up_index
from .element import generator, transposition
from .report import ExperimentReport
from .words import evaluate, format_word, parse

EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc}") from None
    return text


def load_element(text: str, n: int | None) -> Element:
    """An element given as a JSON record, ``@file``, or word text (needs -n)."""
    text = _read_arg(text).strip()
    if text.startswith("{"):
        return Element.from_json(text)
    if n is None:
        raise InputError("word input needs -n")
    return evaluate(parse(text, n))


def _element_record(e: Element) -> dict:
    prof = complexity(e)
    return {"element": e.to_record(), "p": list(prof.p), "P": prof.P, "T": prof.T}


def _emit(args, record: dict | None = None, report: ExperimentReport | None = None) -> None:
    if report is not None:
        sys.stdout.write(report.to_table())
        if args.csv:
            Path(args.csv).write_text(report.to_csv())
        if args.json:
            Path(args.json).write_text(report.to_json())
        return
    text = json.dumps(record, sort_keys=True)
    sys.stdout.write(text + "\n")
    if args.json:
        Path(args.json).write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")


def cmd_eval(args):
    _emit(args, _element_record(evaluate(parse(args.word, args.n))))


def cmd_synth(args):
    e = load_element(args.element, args.n)
    rep = synthesize_word(e)
    if evaluate(rep.word) != e:  # pragma: no cover - guarded by the test suite
        raise RuntimeError("synthesized word does not evaluate to the input")
    _emit(args, rep.to_record())


def cmd_length(args):
    e = load_element(args.element, args.n)
    genset = args.genset or ("h2" if e.n == 2 else "gij")
    word = geodesic(e, genset, max_length=args.cap, cap=args.budget)
    record = {"genset": genset, "P": complexity(e).P}
    if word is None:
        record.update(length=None, status=f"Unknown({args.cap})")
    else:
        record.update(length=len(word), status="exact", geodesic=format_word(word))
    _emit(args, record)


def cmd_ball(args):
    genset = args.genset or ("h2" if args.n == 2 else "gij")
    ball = bfs_ball(args.n, genset, args.radius, cap=args.budget)
    rows = [{"length": d, "count": c} for d, c in enumerate(ball.sphere_sizes())]
    report = ExperimentReport("ball", {"n": args.n, "genset": genset, "radius": args.radius}, rows)
    sys.stdout.write(report.to_table())
    if args.csv:
        Path(args.csv).write_text(ball.growth_csv())
    if args.dump:
        Path(args.dump).write_text(ball.dump_csv())
    if args.json:
        Path(args.json).write_text(report.to_json())


def cmd_growth(args):
    genset = args.genset or ("h2" if args.n == 2 else "gij")
    _emit(args, report=growth_report(args.n, genset, args.radius, cap=args.budget))


def cmd_distortion(args):
    report = distortion_report(args.max_k, h2_cap=args.cap, h3_cap=args.h3_cap, identity_k=args.identity_k,
                               cap=args.budget)
    _emit(args, report=report)


def cmd_cosets(args):
    index = up_index(args.n_rays, args.p)
    report = ExperimentReport("cosets", {"n": args.n_rays, "p": args.p}, [{"n": args.n_rays, "p": args.p, "index": index}])
    _emit(args, report=report)


def cmd_split(args):
    e = load_element(args.element, args.n)
    image = split_rays(e, args.p)
    _emit(args, {"p": args.p, "image": image.to_record()})


def _archetype(name: str, n: int, p: int) -> NpElement:
    if name == "shift":
        return NpElement.from_element(generator(n, 1, 0), p)
    if name == "swap":
        return NpElement.from_ray_perm(RayPermutation.cycle(n, 0, 1), p)
    if name == "finitary":
        return NpElement.from_element(transposition(n, (0, 1), (1, 2)), p)
    raise InputError(f"unknown archetype {name!r}")


def cmd_qi(args):
    if args.phi:
        phi = NpElement.from_json(_read_arg(args.phi))
    else:
        phi = _archetype(args.archetype, args.n or 3, args.p)
    sigma, cert = qi_witness(phi, args.N)
    _emit(args, {"phi": phi.to_record(), "N": args.N, "sigma": sigma.to_record(), "certified_lower_bound": cert,
                 "ok": cert >= args.N})


def cmd_check_cohopf(args):
    report = cohopf_report(seed=args.seed, pairs=args.pairs, n=args.n or 3)
    _emit(args, report=report)
    return 0 if all(r["ok"] for r in report.rows) else 1


def cmd_check_free(args):
    report = free_report(args.length)
    _emit(args, report=report)
    return 0 if all(r["ok"] for r in report.rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="houghton", description="Computations in Houghton's groups H_n.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=None, help="number of rays")
    common.add_argument("--genset", choices=["gij", "gi", "h2"], default=None)
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--csv", metavar="PATH")
    common.add_argument("--json", metavar="PATH")
    common.add_argument("--budget", type=int, default=DEFAULT_CAP, help="maximum number of elements a search may visit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval, need_n=True)

    p = sub.add_parser("synth", parents=[common], help="synthesize a g_ij word within 7 P log2 P")
    p.add_argument("element", help="JSON record, @file, or word text (with -n)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("length", parents=[common], help="exact word length by bidirectional BFS")
    p.add_argument("element")
    p.add_argument("--cap", type=int, default=12, help="longest word length searched (default 12)")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("ball", parents=[common], help="sphere sizes of a BFS ball")
    p.add_argument("--radius", type=int, default=5)
    p.add_argument("--dump", metavar="PATH", help="write every element with its length as CSV")
    p.set_defaults(func=cmd_ball, need_n=True)

    p = sub.add_parser("growth", parents=[common], help="growth of balls with the 2^r floor")
    p.add_argument("--radius", type=int, default=7)
    p.set_defaults(func=cmd_growth, need_n=True)

    p = sub.add_parser("distortion", parents=[common], help="sigma_k lengths in H_2 and H_3")
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--cap", type=int, default=H2_LENGTH_CAP, help="longest H_2 word length searched")
    p.add_argument("--h3-cap", type=int, default=H3_LENGTH_CAP, help="longest H_3 word length searched")
    p.add_argument("--identity-k", type=int, default=100, help="check the H_3 word identity up to this k")
    p.set_defaults(func=cmd_distortion)

    p = sub.add_parser("cosets", parents=[common], help="index of U_p in H_n by coset enumeration")
    p.add_argument("n_rays", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("split", parents=[common], help="image of an element of U_p in H_np")
    p.add_argument("element")
    p.add_argument("-p", type=int, default=2)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("qi", parents=[common], help="witness that a commensuration is far from the identity")
    p.add_argument("phi", nargs="?", help="commensuration record {p, base, blocks} (JSON or @file)")
    p.add_argument("--archetype", choices=["shift", "swap", "finitary"], default="shift")
    p.add_argument("-p", type=int, default=2)
    p.add_argument("-N", type=int, default=50)
    p.set_defaults(func=cmd_qi)

    p = sub.add_parser("check-cohopf", parents=[common], help="verify the doubling embedding")
    p.add_argument("--pairs", type=int, default=200)
    p.set_defaults(func=cmd_check_cohopf)

    p = sub.add_parser("check-free", parents=[common], help="g_01, g_02 generate a free semigroup")
    p.add_argument("--length", type=int, default=10)
    p.set_defaults(func=cmd_check_free)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "need_n", False) and args.n is None:
        parser.error(f"{args.command} needs -n")
    try:
        status = args.func(args)
    except UnsupportedConfiguration as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
