"""Hitting times, cover cost and reverse cover cost of the simple random walk.

The first-step linear system is the ground truth.  Two formula routes sit
next to it: the general resistance identity
``H(x, y) = m r(x, y) + (R^w(y) - R^w(x)) / 2`` and its unicyclic
specialization in terms of ``n``, ``R`` and branch depths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import StepCapExceeded
from .exact import RationalMatrix, laplacian, solve_many
from .graph import Graph, UnicyclicDecomposition, shortest_distance_matrix
from .resistance import (
    ResistanceMatrix,
    kirchhoff_index,
    resistance_centrality,
    resistance_unicyclic,
    resistances,
    weighted_resistance_centrality,
)

DEFAULT_STEP_CAP = 10**7
BLOCK_SIZE = 4096


@dataclass(frozen=True)
class HittingTimeMatrix:
    """Entry ``(x, y)`` is the expected hitting time of ``y`` from ``x``."""
    matrix: RationalMatrix

    def __getitem__(self, xy) -> Fraction:
        return self.matrix[xy]

    @property
    def n(self) -> int:
        return self.matrix.rows


def hitting_times_exact(g: Graph, target: int) -> list[Fraction]:
    """H(x, target) for every x, from H(target) = 0, H(x) = 1 + mean of H over neighbours.

    Multiplying through by d(x) turns the system into the Laplacian with the
    target row and column removed, right-hand side the degree vector.
    """
    shortest_distance_matrix(g)
    keep = [v for v in range(g.n) if v != target]
    reduced = laplacian(g).submatrix(keep, keep)
    sol = solve_many(reduced, [[g.degree[v] for v in keep]])[0] if keep else []
    out = [Fraction(0)] * g.n
    for v, h in zip(keep, sol):
        out[v] = h
    return out


def hitting_time_matrix(g: Graph) -> HittingTimeMatrix:
    cols = [hitting_times_exact(g, y) for y in range(g.n)]
    return HittingTimeMatrix(RationalMatrix.from_rows(
        [[cols[y][x] for y in range(g.n)] for x in range(g.n)]))


def hitting_time_formula_general(g: Graph, x: int, y: int,
                                 r: ResistanceMatrix | None = None) -> Fraction:
    if r is None:
        r = resistances(g, "laplacian")
    return g.m * r[x, y] + (weighted_resistance_centrality(g, y, r)
                            - weighted_resistance_centrality(g, x, r)) / 2


def hitting_time_formula_unicyclic(dec: UnicyclicDecomposition, x: int, y: int,
                                   r: ResistanceMatrix | None = None) -> Fraction:
    g = dec.graph
    if r is None:
        r = resistances(g, "unicyclic")
    return (g.n * resistance_unicyclic(dec, x, y)
            + resistance_centrality(g, y, r) - resistance_centrality(g, x, r)
            + dec.branch_distance[y] - dec.branch_distance[x])


def cover_cost(g: Graph, x: int, h: HittingTimeMatrix | None = None) -> Fraction:
    if h is None:
        return sum(hitting_times_exact(g, y)[x] for y in range(g.n))
    return sum((h[x, y] for y in range(g.n)), Fraction(0))


def reverse_cover_cost(g: Graph, x: int, h: HittingTimeMatrix | None = None) -> Fraction:
    if h is None:
        return sum(hitting_times_exact(g, x), Fraction(0))
    return sum((h[y, x] for y in range(g.n)), Fraction(0))


def cover_cost_closed(dec: UnicyclicDecomposition, x: int,
                      r: ResistanceMatrix | None = None) -> Fraction:
    """Cover cost from the Kirchhoff index, root transmissions and the depth of ``x``."""
    g = dec.graph
    kf = kirchhoff_index(g, r if r is not None else resistances(g, "unicyclic"))
    return 2 * kf + dec.total_branch_transmission - g.n * dec.branch_distance[x]


def reverse_cover_cost_closed(dec: UnicyclicDecomposition, x: int,
                              r: ResistanceMatrix | None = None) -> Fraction:
    g = dec.graph
    if r is None:
        r = resistances(g, "unicyclic")
    return (2 * g.n * resistance_centrality(g, x, r) - 2 * kirchhoff_index(g, r)
            - dec.total_branch_transmission + g.n * dec.branch_distance[x])


# --- Monte Carlo -----------------------------------------------------------

@dataclass(frozen=True)
class WalkStats:
    sample_mean: float
    standard_error: float
    trials: int
    seed: int
    capped: int = 0  # trials that hit the step cap, excluded from the mean

    def z_score(self, exact) -> float:
        diff = self.sample_mean - float(exact)
        if self.standard_error == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / self.standard_error


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(block,)))


def _simulate_block(nbr, deg, x, y, count, rng, cap):
    steps = np.zeros(count, dtype=np.int64)
    if x == y:
        return steps, 0
    pos = np.full(count, x, dtype=np.int64)
    active = np.arange(count)
    t = 0
    while active.size and t < cap:
        p = pos[active]
        pick = (rng.random(active.size) * deg[p]).astype(np.int64)
        p = nbr[p, pick]
        pos[active] = p
        t += 1
        done = p == y
        steps[active[done]] = t
        active = active[~done]
    steps[active] = -1
    return steps, active.size


def simulate_hitting_time(g: Graph, x: int, y: int, trials: int, seed: int,
                          step_cap: int = DEFAULT_STEP_CAP) -> WalkStats:
    """Monte-Carlo estimate of H(x, y).

    Trials are split into fixed blocks of ``BLOCK_SIZE``; block ``b`` draws
    from its own stream spawned from ``(seed, b)``, so results do not depend
    on how blocks are scheduled.  Trials reaching ``step_cap`` are dropped
    and counted in ``capped``; StepCapExceeded is raised only if every trial
    was capped.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    shortest_distance_matrix(g)
    width = max(g.degree)
    nbr = np.zeros((g.n, width), dtype=np.int64)
    for v, adj in enumerate(g.adjacency):
        nbr[v, :len(adj)] = adj
    deg = np.asarray(g.degree, dtype=np.int64)
    parts = []
    capped = 0
    for b, start in enumerate(range(0, trials, BLOCK_SIZE)):
        count = min(BLOCK_SIZE, trials - start)
        steps, c = _simulate_block(nbr, deg, x, y, count, _block_rng(seed, b), step_cap)
        parts.append(steps[steps >= 0])
        capped += c
    samples = np.concatenate(parts).astype(np.float64)
    if samples.size == 0:
        raise StepCapExceeded(f"all {trials} trials exceeded {step_cap} steps")
    mean = float(samples.mean())
    se = float(samples.std(ddof=1) / math.sqrt(samples.size)) if samples.size > 1 else 0.0
    return WalkStats(mean, se, trials, seed, capped)
