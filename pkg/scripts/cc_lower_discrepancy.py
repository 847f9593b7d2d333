"""Tabulate the stated minimum cover cost against exhaustive and closed-form data.

At n = 9 the exhaustive minimum is included because 9 is within the default
enumeration cap; raise WALKGAUGE_MAX_N to 10 to include n = 10 (about a minute).
"""
import argparse
import json
from dataclasses import dataclass

from walkgauge.theorems import report_cc_lower_discrepancy


@dataclass
class DiscrepancyConfig:
    exhaustive_n_max: int = 8
    closed_form_ns: tuple = (9, 10)
    jobs: int = 1


def run(cfg: DiscrepancyConfig) -> dict:
    rep = report_cc_lower_discrepancy(cfg.exhaustive_n_max, cfg.closed_form_ns, cfg.jobs)
    for row in rep.details["rows"]:
        if row["source"] == "exhaustive":
            print(f"n={row['n']:>2} exhaustive min {row['exhaustive_min']:>8}  "
                  f"stated {row['stated']:>8}  agrees={row['agrees']}")
        else:
            extra = f"  exhaustive min {row['exhaustive_min']}" if "exhaustive_min" in row else ""
            print(f"n={row['n']:>2} stated {row['stated']:>6}  envelope {row['envelope_min']} "
                  f"at l={row['envelope_argmin']}  S4 pendant {row['s4_pendant_cc_walk']}{extra}")
    return rep.to_dict()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive-n-max", type=int, default=8)
    ap.add_argument("--closed-form-n", type=int, nargs="*", default=[9, 10])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="also dump the full report")
    a = ap.parse_args()
    out = run(DiscrepancyConfig(a.exhaustive_n_max, tuple(a.closed_form_n), a.jobs))
    if a.json:
        print(json.dumps(out, indent=2))
