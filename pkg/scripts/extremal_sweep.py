"""Exhaustive extremal sweep: global CC/RC extremes and per-cycle-length bounds."""
import argparse
import time
from dataclasses import dataclass

from walkgauge.theorems import verify_bounds_nl, verify_extremal_cc, verify_extremal_rc


@dataclass
class SweepConfig:
    n_min: int = 3
    n_max: int = 8
    jobs: int = 1
    per_cycle: bool = True


def run(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'n':>3} {'check':<12} {'min':>10} {'max':>10} status")
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        for rep in (verify_extremal_cc(n, cfg.jobs), verify_extremal_rc(n, cfg.jobs)):
            d = rep.details
            print(f"{n:>3} {rep.check_name:<12} {d['min']['value']:>10} {d['max']['value']:>10} {rep.status}")
            ok &= rep.passed
        if cfg.per_cycle:
            for l in range(3, n + 1):
                rep = verify_bounds_nl(n, l, cfg.jobs)
                ok &= rep.passed
                parts = " ".join(f"{k}={rep.details[k]['value']}({rep.details[k]['status']})"
                                 for k in ("cc_lower", "cc_upper", "rc_lower", "rc_upper"))
                print(f"{n:>3}   l={l:<8} graphs={rep.details['graphs']:<4} {parts}")
        print(f"    [{time.perf_counter() - t0:.2f}s]")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-per-cycle", action="store_true")
    a = ap.parse_args()
    raise SystemExit(0 if run(SweepConfig(a.n_min, a.n_max, a.jobs, not a.no_per_cycle)) else 1)
