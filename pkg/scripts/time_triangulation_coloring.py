"""Wall-clock cost of the near-triangulation list coloring as the graph grows.

    python scripts/time_triangulation_coloring.py --sizes 10 20 40 80 160 --repeats 20
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from dataclasses import dataclass, field

from signed_arboricity.color import pin_outer, tree_color_near_triangulation, uniform_lists
from signed_arboricity.core import va_upper_check
from signed_arboricity.oracle import generate_balanced, generate_triangulation
from signed_arboricity.planar import NearTriangulation


@dataclass
class TimingConfig:
    sizes: list[int] = field(default_factory=lambda: [10, 20, 40, 80])
    repeats: int = 10
    seed: int = 0


def time_size(n: int, cfg: TimingConfig, rng: random.Random) -> list[float]:
    samples = []
    for _ in range(cfg.repeats):
        seed = rng.randrange(2**31)
        edges, rot = generate_triangulation(n, 2 * n, seed)
        nt = NearTriangulation(generate_balanced(edges, seed, n), rot)
        lists = pin_outer(nt, uniform_lists(nt.graph.vertices, 3))
        start = time.perf_counter()
        c = tree_color_near_triangulation(nt, lists)
        samples.append(time.perf_counter() - start)
        assert va_upper_check(nt.graph, c, 3)
    return samples


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    cfg = TimingConfig(args.sizes, args.repeats, args.seed)
    rng = random.Random(cfg.seed)
    print(f"{'|V|':>6} {'median ms':>10} {'max ms':>8}")
    for n in cfg.sizes:
        samples = time_size(n, cfg, rng)
        print(f"{n:>6} {1000 * statistics.median(samples):>10.2f} {1000 * max(samples):>8.2f}")


if __name__ == "__main__":
    main()
