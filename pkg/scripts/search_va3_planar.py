"""Look for a planar triangulation whose vertex arboricity is exactly 3.

Triangulations are drawn from the random generator, all-positive, and fed to
the unsigned exhaustive oracle.  Nothing is asserted: the script reports the
arboricity histogram and writes the first va = 3 instance it finds.

    python scripts/search_va3_planar.py --vertices 12 16 --trials 400 --seed 1 -o va3.json
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from signed_arboricity.core import SignedGraph
from signed_arboricity.formats import dump_json, graph_to_dict
from signed_arboricity.oracle import generate_triangulation, oracle_va_unsigned


@dataclass
class SearchConfig:
    min_vertices: int = 10
    max_vertices: int = 14
    trials: int = 200
    seed: int = 0
    output: str | None = None


def search(cfg: SearchConfig) -> dict:
    rng = random.Random(cfg.seed)
    histogram: Counter = Counter()
    found = None
    start = time.perf_counter()
    for _ in range(cfg.trials):
        n = rng.randint(cfg.min_vertices, cfg.max_vertices)
        case_seed = rng.randrange(2**31)
        edges, rot = generate_triangulation(n, rng.randint(0, 4 * n), case_seed)
        va = oracle_va_unsigned(edges, 3, n, max_vertices=cfg.max_vertices)
        histogram[(n, va)] += 1
        if va == 3 and found is None:
            g = SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges])
            found = {"vertices": n, "seed": case_seed, "graph": graph_to_dict(g, rot)}
    return {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - start, 2),
        "histogram": [{"vertices": n, "va": va, "count": c} for (n, va), c in sorted(histogram.items())],
        "found": found,
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--vertices", type=int, nargs=2, default=(10, 14), metavar=("MIN", "MAX"))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    args = p.parse_args()
    cfg = SearchConfig(args.vertices[0], args.vertices[1], args.trials, args.seed, args.output)
    result = search(cfg)
    for row in result["histogram"]:
        print(f"|V|={row['vertices']:>3}  va={row['va']}  x{row['count']}")
    print(f"{cfg.trials} triangulations in {result['seconds']}s")
    if result["found"]:
        print(f"va = 3 instance: {result['found']['vertices']} vertices (seed {result['found']['seed']})")
    else:
        print("no va = 3 instance in this sample")
    if cfg.output:
        dump_json(result, cfg.output)


if __name__ == "__main__":
    main()
