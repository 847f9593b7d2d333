"""Per-graph invariant reports (JSON / CSV)."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .canon import DEFAULT_CERT_LIMIT, certificate_hex
from .exact import fmt_rational, spanning_tree_count
from .graph import (
    Graph,
    eccentricity,
    transmission,
    unicyclic_decompose,
    weighted_transmission,
    wiener_index,
)
from .resistance import (
    additive_degree_kirchhoff,
    kirchhoff_index,
    multiplicative_degree_kirchhoff,
    resistance_centrality,
    resistances,
    weighted_resistance_centrality,
)
from .theorems import (
    VerificationReport,
    check_cc_rc_identities,
    check_hitting_time_paths,
    check_kf_identities,
    check_tree_identities,
)
from .walk import cover_cost, hitting_time_matrix, reverse_cover_cost

VERTEX_FIELDS = ["degree", "D", "Dw", "eccentricity", "R", "Rw", "CC", "RC"]
RATIONAL_VERTEX_FIELDS = ["R", "Rw", "CC", "RC"]
SCALAR_RATIONALS = ["Kf", "Kf_plus", "Kf_star"]


@dataclass
class InvariantReport:
    graph: dict
    vertices: list[dict]
    scalars: dict
    provenance: dict
    verification: list[VerificationReport] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(r.passed for r in self.verification)

    def to_dict(self, approx: bool = False) -> dict:
        vertices = [dict(v) for v in self.vertices]
        scalars = dict(self.scalars)
        if approx:
            for v in vertices:
                for k in RATIONAL_VERTEX_FIELDS:
                    v[k + "_approx"] = _approx(v[k])
            for k in SCALAR_RATIONALS:
                scalars[k + "_approx"] = _approx(scalars[k])
        d = {"graph": self.graph, "vertices": vertices, "scalars": scalars,
             "provenance": self.provenance}
        if self.verification:
            d["verification"] = [r.to_dict() for r in self.verification]
        return d

    def to_csv(self, approx: bool = False) -> str:
        cols = ["vertex"] + VERTEX_FIELDS
        if approx:
            cols += [k + "_approx" for k in RATIONAL_VERTEX_FIELDS]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in self.to_dict(approx)["vertices"]:
            w.writerow({k: row[k] for k in cols})
        return buf.getvalue()


def _approx(s: str) -> str:
    return format(float(Fraction(s)), ".15g")


def invariant_report(g: Graph, verify: bool = False) -> InvariantReport:
    """Every invariant of ``g``; ``verify`` additionally runs all redundant paths."""
    path = "unicyclic" if g.is_unicyclic else "laplacian"
    r = resistances(g, path)
    h = hitting_time_matrix(g)
    vertices = []
    for x in range(g.n):
        vertices.append({
            "vertex": x,
            "degree": g.degree[x],
            "D": transmission(g, x),
            "Dw": weighted_transmission(g, x),
            "eccentricity": eccentricity(g, x),
            "R": fmt_rational(resistance_centrality(g, x, r)),
            "Rw": fmt_rational(weighted_resistance_centrality(g, x, r)),
            "CC": fmt_rational(cover_cost(g, x, h)),
            "RC": fmt_rational(reverse_cover_cost(g, x, h)),
        })
    if g.is_tree:
        cycle_length = "tree"
    elif g.is_unicyclic:
        cycle_length = unicyclic_decompose(g).l
    else:
        cycle_length = None
    scalars = {
        "W": wiener_index(g),
        "Kf": fmt_rational(kirchhoff_index(g, r)),
        "Kf_plus": fmt_rational(additive_degree_kirchhoff(g, r)),
        "Kf_star": fmt_rational(multiplicative_degree_kirchhoff(g, r)),
        "spanning_trees": spanning_tree_count(g),
        "cycle_length": cycle_length,
    }
    graph = {"n": g.n, "edges": [list(e) for e in g.edge_list()],
             "certificate": certificate_hex(g) if g.n <= DEFAULT_CERT_LIMIT else None}
    provenance = {"version": __version__, "resistance_path": path,
                  "hitting_time_path": "linear-system"}
    rep = InvariantReport(graph, vertices, scalars, provenance)
    if verify:
        rep.verification.append(check_hitting_time_paths(g))
        if g.is_unicyclic:
            rep.verification += [check_cc_rc_identities(g), check_kf_identities(g)]
            if path == "unicyclic" and resistances(g, "laplacian") != r:
                bad = VerificationReport("resistance-paths", {"n": g.n})
                bad.fail(g, "resistance matrix", "laplacian", "unicyclic")
                rep.verification.append(bad)
        if g.is_tree:
            rep.verification.append(check_tree_identities(g))
        rep.provenance["verified_paths"] = ["linear-system", "general-formula"] + (
            ["unicyclic-formula", "closed-forms"] if g.is_unicyclic else [])
    return rep
