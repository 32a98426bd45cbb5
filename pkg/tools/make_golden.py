#!/usr/bin/env python3
"""Write the golden corpus from the hand-typed published sequences.

Terms come from tests/published_values.py, not from the solvers; bars follow
the gap rule. Run from the repository root.
"""
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path[:0] = [str(ROOT / "src"), str(ROOT / "tests")]

import published_values as pv  # noqa: E402
from secant_indices import cli  # noqa: E402
from secant_indices.pointset import load as load_points  # noqa: E402
from secant_indices.segre import SegreInstance  # noqa: E402
from secant_indices.sequences import IndexSequence, parse_bars  # noqa: E402
from secant_indices.veronese import VeroneseInstance  # noqa: E402

OUT = ROOT / "src" / "secant_indices" / "golden"


def write(kind, name, rec):
    path = OUT / kind / f"{name}.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(cli.dump_record(rec))


def main():
    for (n, d), text in pv.VERONESE.items():
        seq = IndexSequence(parse_bars(text))
        write("veronese", f"n{n}_d{d}", cli.veronese_record(VeroneseInstance(n, d), seq))
    for (n, m), text in pv.SEGRE.items():
        seq = IndexSequence(parse_bars(text))
        write("segre", f"n{n}_m{m}", cli.segre_record(SegreInstance(n, m), seq))
    write("poset", "counterexample", cli.poset_record("builtin:counterexample", pv.POSET_GREEDY, None))
    load_points("builtin:q2-example")  # the genericity checks must pass first
    write("pointset", "q2-example", cli.pointset_record(
        "builtin:q2-example", IndexSequence(pv.POINTSET_SECANT), IndexSequence(pv.POINTSET_CHAIN)))
    grid = IndexSequence((1, 3, 9))
    write("pointset", "grid-3x3", cli.pointset_record("builtin:grid-3x3", grid, grid))


if __name__ == "__main__":
    main()
