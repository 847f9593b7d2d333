"""Monte-Carlo hitting times against exact values over a fixed cell suite."""
import argparse
import time
from dataclasses import dataclass

from walkgauge.enumerate import enumerate_unicyclic
from walkgauge.graph import make_cycle, make_P, make_path, make_star
from walkgauge.io import encode_graph6
from walkgauge.walk import hitting_times_exact, simulate_hitting_time


@dataclass
class MonteCarloConfig:
    trials: int = 100_000
    base_seed: int = 1000
    z_threshold: float = 3.0


def cells():
    out = []
    for n in (4, 5, 6):
        for g in enumerate_unicyclic(n):
            out += [(g, 0, n - 1), (g, n - 1, 0)]
    out += [(make_path(3), 0, 2), (make_path(3), 1, 2), (make_path(4), 0, 3),
            (make_star(5), 1, 2), (make_star(5), 1, 0), (make_star(5), 0, 1),
            (make_path(5), 0, 4), (make_path(5), 2, 4), (make_cycle(7), 0, 3), (make_P(8, 4), 7, 0)]
    return out


def run(cfg: MonteCarloConfig) -> float:
    t0 = time.perf_counter()
    suite = cells()
    within = 0
    for i, (g, x, y) in enumerate(suite):
        exact = hitting_times_exact(g, y)[x]
        s = simulate_hitting_time(g, x, y, cfg.trials, cfg.base_seed + i)
        z = s.z_score(exact)
        within += abs(z) <= cfg.z_threshold
        print(f"{i:>2} {encode_graph6(g):<8} {x}->{y}  exact {float(exact):9.4f}  "
              f"mean {s.sample_mean:9.4f}  se {s.standard_error:.4f}  z {z:+.2f}")
    frac = within / len(suite)
    print(f"{within}/{len(suite)} within {cfg.z_threshold} SE  [{time.perf_counter() - t0:.1f}s]")
    return frac


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1000)
    a = ap.parse_args()
    run(MonteCarloConfig(a.trials, a.seed))
