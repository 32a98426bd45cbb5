"""Command line entry point: ``secant-indices <command> ...``.

Exit codes: 0 success, 1 cross-check disagreement, 2 search budget refused,
3 invalid input, 4 golden mismatch.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from . import pointset as ps
from . import poset as pg
from .monomials import BoxIdeal, Monomial, quotient_dim, quotient_dim_inclusion_exclusion
from .search import DEFAULT_MAX_NODES, SearchBudgetExceeded
from .segre import SegreInstance, last_gap, rlg_segre_oracle, solve_segre
from .sequences import IndexSequence, compare_total, gaps, render_with_bars
from .veronese import VeroneseInstance, n2_closed_form, rlg_veronese, rlg_veronese_oracle

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_BUDGET = 2
EXIT_INVALID = 3
EXIT_GOLDEN = 4

KINDS = ("veronese", "segre", "poset", "pointset")


class GoldenMismatch(RuntimeError):
    pass


# --- records: the deterministic part of every report, also the golden format --

def veronese_record(inst: VeroneseInstance, seq: IndexSequence) -> dict:
    return {
        "variety": "veronese",
        "n": inst.n,
        "d": inst.d,
        "N": inst.N,
        "codim": inst.codim,
        "degree": inst.degree,
        "terms": list(seq.terms),
        "bars": render_with_bars(seq),
    }


def segre_record(inst: SegreInstance, seq: IndexSequence) -> dict:
    return {
        "variety": "segre",
        "n": inst.n,
        "m": inst.m,
        "N": inst.N,
        "codim": inst.codim,
        "degree": inst.degree,
        "terms": list(seq.terms),
        "bars": render_with_bars(seq),
        "last_gap": last_gap(inst),
    }


def poset_record(source: str, greedy, exact: Optional[pg.ExactResult]) -> dict:
    rec = {"variety": "poset", "source": source, "greedy": list(greedy)}
    if exact is not None:
        rec["lexmax"] = list(exact.lexmax)
        rec["termwise"] = list(exact.termwise)
        rec["verdict"] = pg.verdict(greedy, exact.termwise)
    return rec


def pointset_record(source: str, secant: IndexSequence, chain: IndexSequence) -> dict:
    return {
        "variety": "pointset",
        "source": source,
        "secant": secant.to_record(),
        "chain": chain.to_record(),
        "chain_vs_secant": compare_total(chain, secant).value,
    }


def dump_record(rec: dict) -> str:
    return json.dumps(rec, indent=2, sort_keys=True) + "\n"


def _gap_list(seq: IndexSequence) -> list[list[int]]:
    return [list(g) for g in gaps(seq).gaps]


# --- commands --------------------------------------------------------------

def cmd_veronese(args) -> tuple[dict, int]:
    inst = VeroneseInstance(args.n, args.d)
    t0 = time.perf_counter()
    seq = rlg_veronese(inst)
    report = veronese_record(inst, seq)
    report["gaps"] = _gap_list(seq)
    status = EXIT_OK
    if args.oracle:
        orc = rlg_veronese_oracle(inst, max_nodes=args.max_nodes)
        report["oracle_termwise_agrees"] = orc.termwise == seq
        report["oracle_lexmax_agrees"] = orc.lexmax == seq
        report["nodes_explored"] = orc.nodes
        if orc.termwise != seq or orc.lexmax != seq:
            status = EXIT_DISAGREE
    if args.closed_form_check:
        if inst.n != 2 or inst.d < 3:
            raise ValueError("the closed form covers n = 2, d >= 3 only")
        agrees = n2_closed_form(inst.d) == seq
        report["closed_form_agrees"] = agrees
        if not agrees:
            status = EXIT_DISAGREE
    report["seconds"] = round(time.perf_counter() - t0, 6)
    return report, status


def cmd_segre(args) -> tuple[dict, int]:
    inst = SegreInstance(args.n, args.m)
    t0 = time.perf_counter()
    res = solve_segre(inst, max_nodes=args.max_nodes, workers=args.threads)
    seq = res.sequence
    report = segre_record(inst, seq)
    report["gaps"] = _gap_list(seq)
    report["last_gap_observed"] = seq[-1] - seq[-2] if len(seq) > 1 else None
    report["last_gap_agrees"] = report["last_gap_observed"] == report["last_gap"]
    report["nodes_explored"] = res.nodes
    status = EXIT_OK
    if args.trace:
        report["trace"] = res.trace_lines()
    if args.oracle:
        orc = rlg_segre_oracle(inst, max_nodes=args.max_nodes)
        report["oracle_agrees"] = orc.lexmax == seq
        report["oracle_termwise"] = list(orc.termwise)
        if orc.lexmax != seq:
            status = EXIT_DISAGREE
    report["seconds"] = round(time.perf_counter() - t0, 6)
    return report, status


def cmd_poset(args) -> tuple[dict, int]:
    p = pg.load(args.source)
    t0 = time.perf_counter()
    greedy = pg.solve_greedy(p)
    exact = pg.solve_exact(p, max_nodes=args.max_nodes) if args.exact else None
    report = poset_record(args.source, greedy.counts, exact)
    report["greedy_picks"] = greedy.picks
    report["greedy_complete"] = greedy.complete
    if exact is not None:
        report["witness"] = exact.witness
        report["nodes_explored"] = exact.nodes
    report["seconds"] = round(time.perf_counter() - t0, 6)
    return report, EXIT_OK


def cmd_pointset(args) -> tuple[dict, int]:
    cfg = ps.load(args.source)
    t0 = time.perf_counter()
    secant = ps.secant_sequence(cfg)
    chain = ps.chain_search(cfg)
    report = pointset_record(args.source, secant, chain.sequence)
    report["chain_witness"] = [sorted(cfg.labels[i] for i in s) for s in chain.chain]
    report["seconds"] = round(time.perf_counter() - t0, 6)
    return report, EXIT_OK


def recompute(rec: dict) -> dict:
    """Rebuild the deterministic record a golden entry describes."""
    kind = rec["variety"]
    if kind == "veronese":
        inst = VeroneseInstance(rec["n"], rec["d"])
        return veronese_record(inst, rlg_veronese(inst))
    if kind == "segre":
        inst = SegreInstance(rec["n"], rec["m"])
        return segre_record(inst, solve_segre(inst).sequence)
    if kind == "poset":
        p = pg.load(rec["source"])
        exact = pg.solve_exact(p) if "lexmax" in rec else None
        return poset_record(rec["source"], pg.solve_greedy(p).counts, exact)
    if kind == "pointset":
        cfg = ps.load(rec["source"])
        return pointset_record(rec["source"], ps.secant_sequence(cfg), ps.chain_sequence(cfg))
    raise ValueError(f"unknown variety {kind!r}")


def default_corpus() -> Path:
    return Path(str(resources.files("secant_indices") / "golden"))


def reproduce(corpus: Path, out=None) -> int:
    out = out or sys.stdout
    files = sorted(p for kind in KINDS for p in (corpus / kind).glob("*.txt"))
    failed = []
    for path in files:
        name = f"{path.parent.name}/{path.stem}"
        expected = path.read_text()
        try:
            got = dump_record(recompute(json.loads(expected)))
            ok = got == expected
        except (ValueError, KeyError, TypeError) as exc:
            ok, got = False, f"error: {exc}"
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
        if not ok:
            failed.append(name)
    if not files:
        print("warning: 0 checked (empty corpus)", file=out)
        return EXIT_OK
    print(f"{len(files) - len(failed)}/{len(files)} golden entries reproduced", file=out)
    if failed:
        print("mismatch: " + ", ".join(failed), file=out)
        return EXIT_GOLDEN
    return EXIT_OK


def selfcheck(seed: int, trials: int, out=None) -> int:
    """Randomized monomial-ideal checks: monotonicity and inclusion-exclusion."""
    out = out or sys.stdout
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        n, d = rng.randint(1, 4), rng.randint(2, 5)
        ideal = BoxIdeal(n, d)
        for _ in range(rng.randint(1, 3)):
            exps = [rng.randint(0, d - 1) for _ in range(n)]
            while sum(exps) > d:
                i = rng.randrange(n)
                exps[i] = max(0, exps[i] - 1)
            m = Monomial(tuple(exps))
            before = quotient_dim(ideal)
            nxt = ideal.with_extra(m)
            after = quotient_dim(nxt)
            if after > before or (after == before) != ideal.contains(m):
                bad += 1
            ideal = nxt
        if quotient_dim(ideal) != quotient_dim_inclusion_exclusion(ideal):
            bad += 1
    print(f"seed {seed}: {trials} trials, {bad} failures", file=out)
    return EXIT_OK if bad == 0 else EXIT_DISAGREE


# --- text rendering --------------------------------------------------------

def _plain(seq) -> str:
    return ", ".join(str(x) for x in seq)


def render_text(report: dict) -> str:
    kind = report.get("variety")
    lines = []
    if kind in ("veronese", "segre"):
        lines.append(report["bars"])
        params = f"n={report['n']} d={report['d']}" if kind == "veronese" else f"n={report['n']} m={report['m']}"
        lines.append(f"{kind} {params}: N={report['N']} codim={report['codim']} degree={report['degree']}")
        lines.append("gaps: " + (" ".join(f"{p}:{s}" for p, s in report["gaps"]) or "none"))
        if kind == "segre":
            verdict = "ok" if report["last_gap_agrees"] else "MISMATCH"
            lines.append(f"last gap: {report['last_gap_observed']} (expected {report['last_gap']}, {verdict})")
            lines.extend(report.get("trace", []))
        for key in ("oracle_termwise_agrees", "oracle_lexmax_agrees", "oracle_agrees", "closed_form_agrees"):
            if key in report:
                lines.append(f"{key.replace('_', ' ')}: {'yes' if report[key] else 'NO'}")
    elif kind == "poset":
        lines.append("greedy: " + _plain(report["greedy"]))
        if "lexmax" in report:
            lines.append("lexmax: " + _plain(report["lexmax"]))
            lines.append("termwise: " + _plain(report["termwise"]))
            lines.append("verdict: " + report["verdict"])
    elif kind == "pointset":
        lines.append("secant: " + report["secant"]["bars"])
        lines.append("chain: " + report["chain"]["bars"])
        lines.append("chain vs secant: " + report["chain_vs_secant"])
    if "nodes_explored" in report:
        lines.append(f"nodes: {report['nodes_explored']}")
    if "seconds" in report:
        lines.append(f"seconds: {report['seconds']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secant-indices", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--json", action="store_true", help="print the report as JSON")
        p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                       help="search node budget (default %(default)s)")
        if threads:
            p.add_argument("--threads", type=int, default=1,
                           help="worker processes for the search (default 1)")

    p = sub.add_parser("veronese", help="greedy reducible secant indices of v_d(P^n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--closed-form-check", action="store_true", help="compare with the n=2 closed form")
    common(p)
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("segre", help="greedy reducible secant indices of P^n x P^m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by exhaustive enumeration")
    p.add_argument("--trace", action="store_true", help="print the witnessing cuts")
    common(p, threads=True)
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("poset", help="removal game on a poset file or builtin:<name>")
    p.add_argument("source")
    p.add_argument("--exact", action="store_true", help="also solve exactly")
    common(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("pointset", help="secant and chain sequences of a point configuration")
    p.add_argument("source")
    common(p)
    p.set_defaults(func=cmd_pointset)

    p = sub.add_parser("reproduce", help="recompute and bit-compare the golden corpus")
    p.add_argument("corpus", nargs="?", type=Path, default=None)
    p.set_defaults(func=None)

    p = sub.add_parser("selfcheck", help="randomized monomial-ideal invariant checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "reproduce":
            return reproduce(args.corpus or default_corpus())
        if args.command == "selfcheck":
            return selfcheck(args.seed, args.trials)
        report, status = args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = {"command": " ".join(sys.argv[1:] if argv is None else argv), **report}
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(render_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
