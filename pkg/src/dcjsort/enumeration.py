"""Exact counting, exhaustive oracles, and uniform sampling of scenarios.

The closed-form count multiplies the number of ways to shuffle the
per-cycle scenarios (a multinomial over their lengths) by the number of
scenarios per cycle, (l+1)^(l-1) for a cycle needing l sorting steps.  The
two enumerators here are deliberately independent of that formula and of
each other: one walks the abstract fission state space, the other tries
every DCJ on the actual genome and keeps the distance-reducing ones.  Both
exist so the closed forms and the codecs can be checked against brute
force on small instances.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, islice
from typing import Iterator, Sequence

from .adjacency_graph import build_adjacency_graph, dcj_distance
from .errors import GuardExceededError
from .fissions import Fission, FissionScenario, apply_fission, single_cycle
from .genome import DcjOp, Genome, apply_dcj, make_dcj
from .trees import prufer_decode, tree_to_scenario

#: Exhaustive scenario enumeration is refused above this n without force.
MAX_ENUM_N = 8
#: The brute-force DCJ oracle is refused above this distance without force.
MAX_ORACLE_DISTANCE = 5


def make_rng(seed: int) -> random.Random:
    """Deterministic generator: the same seed yields the same stream."""
    return random.Random(seed)


def multinomial(lengths: Sequence[int]) -> int:
    """Exact count of interleavings of groups with the given sizes."""
    total = 0
    out = 1
    for length in lengths:
        if length < 0:
            raise ValueError("lengths must be non-negative")
        total += length
        out *= math.comb(total, length)
    return out


def count_scenarios(lengths: Sequence[int]) -> int:
    """Exact number of parsimonious sorting scenarios for a cycle profile."""
    out = multinomial(lengths)
    for length in lengths:
        if length >= 1:
            out *= (length + 1) ** (length - 1)
    return out


def _legal_fissions(part):
    found = []
    for block in part:
        if len(block) >= 2:
            found.extend(Fission(p, t) for p, t in combinations(block, 2))
    return sorted(found)


def enumerate_scenarios(
    n: int, limit: int | None = None, force: bool = False
) -> Iterator[FissionScenario]:
    """All valid scenarios on (1..n), in lexicographic step order."""
    if n < 1:
        raise ValueError(f"cycle size must be positive, got {n}")
    if n > MAX_ENUM_N and not force:
        raise GuardExceededError(
            f"n={n} exceeds the enumeration guard of {MAX_ENUM_N}; pass force=True to override"
        )

    def walk(part, steps):
        if len(steps) == n - 1:
            yield FissionScenario(n, tuple(steps))
            return
        for f in _legal_fissions(part):
            steps.append(f)
            yield from walk(apply_fission(part, f), steps)
            steps.pop()

    gen = walk(single_cycle(n), [])
    return gen if limit is None else islice(gen, limit)


def _sorting_ops(g: Genome, target: Genome, dist: int) -> list[DcjOp]:
    """Every DCJ on g that moves it one step closer to the target."""
    ops = []
    for x, y in combinations(sorted(g.adjacencies), 2):
        (e1, e2), (e3, e4) = x, y
        for form in (((e1, e3), (e2, e4)), ((e1, e4), (e2, e3))):
            op = make_dcj((x, y), form)
            if dcj_distance(apply_dcj(g, op), target) == dist - 1:
                ops.append(op)
    return sorted(ops)


def enumerate_dcj_sorting_scenarios(
    a: Genome, b: Genome, limit: int | None = None, force: bool = False
) -> Iterator[tuple[DcjOp, ...]]:
    """Brute force: depth-first search over distance-reducing DCJs.

    Independent of the fission model; used as an oracle against the
    closed-form counts.
    """
    dist = build_adjacency_graph(a, b).distance
    if dist > MAX_ORACLE_DISTANCE and not force:
        raise GuardExceededError(
            f"distance {dist} exceeds the oracle guard of {MAX_ORACLE_DISTANCE}; "
            "pass force=True to override"
        )

    def walk(g, d, prefix):
        if d == 0:
            yield tuple(prefix)
            return
        for op in _sorting_ops(g, b, d):
            prefix.append(op)
            yield from walk(apply_dcj(g, op), d - 1, prefix)
            prefix.pop()

    gen = walk(a, dist, [])
    return gen if limit is None else islice(gen, limit)


def sample_scenario(n: int, rng: random.Random) -> FissionScenario:
    """One scenario, uniform over all n^(n-2) of them.

    Draws a uniform Prüfer sequence, decodes it to a tree, and reads the
    scenario off the tree; uniformity carries through the bijections.
    """
    if n < 1:
        raise ValueError(f"cycle size must be positive, got {n}")
    seq = tuple(rng.randrange(n) for _ in range(n - 2)) if n > 2 else ()
    return tree_to_scenario(prufer_decode(seq, n))


def interleave(
    per_cycle: Sequence[FissionScenario], selector: int | random.Random
) -> tuple[tuple[int, Fission], ...]:
    """Merge per-cycle steps into one (cycle index, fission) sequence.

    An integer selector picks that interleaving by lexicographic rank over
    cycle-index sequences; a random.Random draws one uniformly.  Each
    cycle's own steps always stay in order.
    """
    lengths = [len(s.steps) for s in per_cycle]
    total = multinomial(lengths)
    if isinstance(selector, random.Random):
        index = selector.randrange(total)
    else:
        index = int(selector)
        if not 0 <= index < total:
            raise IndexError(f"interleaving index {index} out of range 0..{total - 1}")

    remaining = list(lengths)
    order = []
    for _ in range(sum(lengths)):
        for m in range(len(remaining)):
            if remaining[m] == 0:
                continue
            remaining[m] -= 1
            below = multinomial(remaining)
            if index < below:
                order.append(m)
                break
            index -= below
            remaining[m] += 1

    cursor = [0] * len(per_cycle)
    merged = []
    for m in order:
        merged.append((m, per_cycle[m].steps[cursor[m]]))
        cursor[m] += 1
    return tuple(merged)
