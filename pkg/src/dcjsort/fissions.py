"""Fissions acting on the cycle (1 2 ... n).

Splitting a cycle of the adjacency graph is modeled abstractly as a fission
of the integer cycle (1 2 ... n): two cuts, one after the `base` and one
after the `top`, excise the arc (base, top] into its own cycle.  A sorting
scenario of a cycle with n target adjacencies is then a sequence of n-1
fissions ending in singletons.  The `partner` of a fission is the element
sitting right of the first cut, i.e. the smallest element above the base in
the base's current cycle; partners drive both codecs in
:mod:`dcjsort.parking` and :mod:`dcjsort.trees`.

Cycles are stored as increasing tuples and partitions as tuples of cycles
sorted by their minimum, which is canonical because fissions preserve the
increasing order of every cycle they create.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import InvalidFissionError, InvalidScenarioError, TextFormatError


class Fission(NamedTuple):
    base: int
    top: int


class FissionScenario(NamedTuple):
    """n plus the n-1 fissions that refine (1..n) into singletons."""

    n: int
    steps: tuple[Fission, ...]

    @property
    def bases(self) -> tuple[int, ...]:
        return tuple(f.base for f in self.steps)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(f.top for f in self.steps)


#: A partition of {1..n} into increasing cycles, sorted by minimum element.
CyclePartition = tuple[tuple[int, ...], ...]


def single_cycle(n: int) -> CyclePartition:
    if n < 1:
        raise ValueError(f"cycle size must be positive, got {n}")
    return (tuple(range(1, n + 1)),)


def singletons(n: int) -> CyclePartition:
    return tuple((x,) for x in range(1, n + 1))


def apply_fission(part: CyclePartition, fission) -> CyclePartition:
    """Split one cycle of `part` at the gaps after `base` and after `top`."""
    base, top = fission
    index = next((i for i, blk in enumerate(part) if base in blk), None)
    if index is None:
        raise InvalidFissionError(f"base {base} is not in the partition")
    block = part[index]
    if top <= base:
        raise InvalidFissionError(f"top {top} must exceed base {base}")
    if top not in block:
        if any(top in blk for blk in part):
            raise InvalidFissionError(f"base {base} and top {top} lie in different cycles")
        raise InvalidFissionError(f"top {top} is not in the partition")
    inner = tuple(x for x in block if base < x <= top)
    outer = tuple(x for x in block if not (base < x <= top))
    rest = [blk for i, blk in enumerate(part) if i != index]
    rest.extend((outer, inner))
    return tuple(sorted(rest))


def partner_in(part: CyclePartition, base: int) -> int:
    """Smallest element above `base` in the cycle containing it."""
    for block in part:
        if base in block:
            i = block.index(base)
            if i == len(block) - 1:
                raise InvalidFissionError(f"{base} is the largest element of its cycle")
            return block[i + 1]
    raise InvalidFissionError(f"base {base} is not in the partition")


class ScenarioReport(NamedTuple):
    ok: bool
    step: int | None = None
    reason: str | None = None
    partition: CyclePartition | None = None


def validate_scenario(s: FissionScenario) -> ScenarioReport:
    """Check a scenario step by step; reports the first failure if any."""
    if s.n < 1:
        return ScenarioReport(False, None, f"cycle size must be positive, got {s.n}")
    if len(s.steps) != s.n - 1:
        return ScenarioReport(False, None, f"expected {s.n - 1} fissions, got {len(s.steps)}")
    part = single_cycle(s.n)
    for i, f in enumerate(s.steps, start=1):
        try:
            part = apply_fission(part, f)
        except InvalidFissionError as exc:
            return ScenarioReport(False, i, str(exc), part)
    assert part == singletons(s.n)
    return ScenarioReport(True)


def require_valid(s: FissionScenario) -> FissionScenario:
    report = validate_scenario(s)
    if not report.ok:
        where = f"step {report.step}: " if report.step is not None else ""
        raise InvalidScenarioError(f"invalid scenario: {where}{report.reason}")
    return s


def run_scenario(s: FissionScenario) -> tuple[CyclePartition, ...]:
    """All n partitions the scenario walks through, initial one included."""
    require_valid(s)
    part = single_cycle(s.n)
    trace = [part]
    for f in s.steps:
        part = apply_fission(part, f)
        trace.append(part)
    return tuple(trace)


def scenario_partners(s: FissionScenario) -> tuple[int, ...]:
    """The partner of each step, recomputed from the evolving partition."""
    part = single_cycle(s.n)
    partners = []
    for f in s.steps:
        partners.append(partner_in(part, f.base))
        part = apply_fission(part, f)
    return tuple(partners)


def chain_top(pairs: Sequence[tuple[int, int]], start: int) -> int:
    """Follow last-partner links from `start` until it is no pair's base.

    With `pairs` taken from the tail of a valid scenario, the fixpoint is
    the largest element of the cycle those remaining fissions finish
    sorting, which is how decoders recover fission tops from bases.
    """
    x = start
    for _ in range(len(pairs) + 1):
        last = None
        for base, q in pairs:
            if base == x:
                last = q
        if last is None:
            return x
        x = last
    raise InvalidScenarioError("partner links do not terminate")


def is_non_crossing(part: CyclePartition) -> bool:
    """True when no two cycles interleave around the circle 1..n."""
    owner = {x: i for i, blk in enumerate(part) for x in blk}
    for i in range(len(part)):
        for j in range(i + 1, len(part)):
            merged = sorted(part[i] + part[j])
            runs = 1
            for a, b in zip(merged, merged[1:]):
                if owner[a] != owner[b]:
                    runs += 1
            # four or more alternation runs means the pair crosses
            if runs >= 4:
                return False
    return True


def refines(finer: CyclePartition, coarser: CyclePartition) -> bool:
    """True when every cycle of `finer` sits inside one cycle of `coarser`."""
    cover = {x: i for i, blk in enumerate(coarser) for x in blk}
    for blk in finer:
        target = cover.get(blk[0])
        if target is None or any(cover.get(x) != target for x in blk):
            return False
    return True


def format_scenario(s: FissionScenario) -> str:
    """Text form: n on the first line, then one "base top" pair per line."""
    return "\n".join([str(s.n)] + [f"{f.base} {f.top}" for f in s.steps])


def parse_scenario(text: str) -> FissionScenario:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise TextFormatError("empty scenario text")
    try:
        n = int(rows[0])
    except ValueError:
        raise TextFormatError(f"first line must be the cycle size, got {rows[0]!r}") from None
    steps = []
    for r in rows[1:]:
        fields = r.split()
        try:
            base, top = (int(x) for x in fields)
        except ValueError:
            raise TextFormatError(f"expected 'base top', got {r!r}") from None
        steps.append(Fission(base, top))
    return FissionScenario(n, tuple(steps))
