"""Independent brute-force oracles and the statistical verification harness.

Everything here is deliberately naive: partitions come from exhaustive
restricted-growth-string enumeration, walk counts from explicit step
enumeration.  Guards are hard limits so the oracle suite cannot blow up in
CI; they raise rather than truncate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from scipy.stats import chi2

from .counting import chamber_count, loop_free_even_count, total_partitions, total_regular
from .diagrams import Partition, is_k_noncrossing, is_m_regular
from .walks import BRAID_WALK, PARTITION_WALK, in_chamber, in_orthant, start_point

ENUM_GUARD = 13
WALK_GUARD = 14


def enum_partitions(n: int):
    """All partitions of [n] as Partition objects, in restricted-growth
    lexicographic order.  Exactly Bell(n) of them."""
    if n > ENUM_GUARD:
        raise ValueError(f"enumeration guarded at n <= {ENUM_GUARD}, got {n}")
    if n == 0:
        yield Partition.from_blocks(0, [])
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for v, b in enumerate(rgs):
                blocks.setdefault(b, []).append(v + 1)
            yield Partition.from_blocks(n, [blocks[b] for b in sorted(blocks)])
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(0, -1)


def enum_filtered(n: int, k: int, m: int | None = None) -> list[Partition]:
    """k-noncrossing partitions of [n], optionally also m-regular."""
    out = []
    for p in enum_partitions(n):
        if not is_k_noncrossing(p, k):
            continue
        if m is not None and not is_m_regular(p, m):
            continue
        out.append(p)
    return out


def _step_targets(point, k: int, adding: bool):
    yield 0, point
    for i in range(k - 1):
        if adding:
            yield i + 1, point[:i] + (point[i] + 1,) + point[i + 1 :]
        else:
            yield -(i + 1), point[:i] + (point[i] - 1,) + point[i + 1 :]


def brute_walk_profile(
    k: int,
    s: int,
    kind: str = PARTITION_WALK,
    loop_free: bool = False,
    confine: str = "W",
) -> Counter:
    """Endpoint -> count over all confined walks of length s, by depth-first
    enumeration of step sequences."""
    if s > WALK_GUARD:
        raise ValueError(f"walk enumeration guarded at s <= {WALK_GUARD}, got {s}")
    ok = in_chamber if confine == "W" else in_orthant
    counts: Counter = Counter()
    track = loop_free and kind == BRAID_WALK

    def rec(pos: int, point, pending: bool):
        if pos == s:
            counts[point] += 1
            return
        stepno = pos + 1
        odd = stepno % 2 == 1
        adding = odd if kind == BRAID_WALK else not odd
        for step, q in _step_targets(point, k, adding):
            if not ok(q):
                continue
            if track:
                if odd:
                    rec(pos + 1, q, step == 1)
                    continue
                if pending and step == -1:
                    continue
                rec(pos + 1, q, False)
                continue
            rec(pos + 1, q, False)

    rec(0, start_point(k), False)
    return counts


def brute_walk_count(
    k: int,
    v,
    s: int,
    kind: str = PARTITION_WALK,
    loop_free: bool = False,
    confine: str = "W",
) -> int:
    """Count confined walks from the start point to v, pruning branches
    that can no longer reach v with the adds/removes still available."""
    if s > WALK_GUARD:
        raise ValueError(f"walk enumeration guarded at s <= {WALK_GUARD}, got {s}")
    v = tuple(v)
    ok = in_chamber if confine == "W" else in_orthant
    track = loop_free and kind == BRAID_WALK
    total = 0

    def feasible(point, pos: int) -> bool:
        adds = removes = 0
        for stepno in range(pos + 1, s + 1):
            odd = stepno % 2 == 1
            if (odd and kind == BRAID_WALK) or (not odd and kind == PARTITION_WALK):
                adds += 1
            else:
                removes += 1
        up = sum(max(b - a, 0) for a, b in zip(point, v))
        down = sum(max(a - b, 0) for a, b in zip(point, v))
        return up <= adds and down <= removes

    def rec(pos: int, point, pending: bool):
        nonlocal total
        if pos == s:
            if point == v:
                total += 1
            return
        if not feasible(point, pos):
            return
        stepno = pos + 1
        odd = stepno % 2 == 1
        adding = odd if kind == BRAID_WALK else not odd
        for step, q in _step_targets(point, k, adding):
            if not ok(q):
                continue
            if track:
                if odd:
                    rec(pos + 1, q, step == 1)
                    continue
                if pending and step == -1:
                    continue
                rec(pos + 1, q, False)
                continue
            rec(pos + 1, q, False)

    rec(0, start_point(k), False)
    return total


# ---------------------------------------------------------------------------
# uniformity testing
# ---------------------------------------------------------------------------

class UniverseIndex:
    """Canonical ordering of an enumerated object set with stable positions."""

    def __init__(self, objects):
        self._objects = list(objects)
        self._index = {self._key(obj): i for i, obj in enumerate(self._objects)}
        if len(self._index) != len(self._objects):
            raise ValueError("duplicate objects in universe")

    @staticmethod
    def _key(obj):
        return obj.blocks if isinstance(obj, Partition) else obj

    def __len__(self) -> int:
        return len(self._objects)

    def object_at(self, i: int):
        return self._objects[i]

    def index_of(self, obj) -> int:
        key = self._key(obj)
        if key not in self._index:
            raise KeyError(f"object {key} outside the universe")
        return self._index[key]


@dataclass(frozen=True)
class ChiSquareReport:
    statistic: float
    dof: int
    threshold: float
    alpha: float
    passed: bool
    max_rel_deviation: float


def chi_square_uniformity(samples, universe: UniverseIndex,
                          alpha: float = 0.001) -> ChiSquareReport:
    """Pearson statistic of the sample counts against the uniform law on
    the universe.  A sample outside the universe is a hard failure
    (uniformity is meaningless on the wrong support)."""
    counts = [0] * len(universe)
    n = 0
    for sample in samples:
        counts[universe.index_of(sample)] += 1
        n += 1
    if n == 0:
        raise ValueError("no samples")
    cells = len(universe)
    expected = n / cells
    stat = sum((c - expected) ** 2 for c in counts) / expected
    max_rel = max(abs(c - expected) for c in counts) / expected
    dof = cells - 1
    if dof == 0:
        return ChiSquareReport(0.0, 0, 0.0, alpha, True, max_rel)
    threshold = float(chi2.isf(alpha, dof))
    return ChiSquareReport(stat, dof, threshold, alpha, stat <= threshold, max_rel)


# ---------------------------------------------------------------------------
# verification report (backs the CLI `verify` command)
# ---------------------------------------------------------------------------

def _check(name: str, params: dict, expected, actual) -> dict:
    return {
        "name": name,
        "params": params,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def run_verification(k_max: int = 4, n_max: int = 8) -> dict:
    """Cross-check the count engine, bijections and tables against the
    brute-force oracles; returns a JSON-ready report."""
    from .bijection import decode_partition, encode_partition
    from .counting import ChamberTable, LoopFreeTable
    from .walks import Walk, legal_steps, apply_step, shape_to_point

    checks: list[dict] = []

    for k in range(2, k_max + 1):
        expected = [len(enum_filtered(n, k)) for n in range(n_max + 1)]
        actual = [total_partitions(k, n) for n in range(n_max + 1)]
        checks.append(_check("totals/plain", {"k": k, "n_max": n_max}, expected, actual))
    for k in range(3, k_max + 1):
        expected = [len(enum_filtered(n, k, 2)) for n in range(n_max + 1)]
        actual = [total_regular(k, n) for n in range(n_max + 1)]
        checks.append(_check("totals/regular", {"k": k, "n_max": n_max}, expected, actual))

    # reflection assembly vs direct chamber DP vs brute enumeration
    for k in range(2, min(k_max, 5) + 1):
        s_cap = 10 if k >= 4 else 12
        table = ChamberTable.build(k, s_cap)
        mismatches = []
        for s in range(s_cap + 1):
            brute = brute_walk_profile(k, s, PARTITION_WALK, False, "W")
            for v, cnt in brute.items():
                if table.count(v, s) != cnt or chamber_count(k, v, s) != cnt:
                    mismatches.append([list(v), s])
            stored = dict(table.slice_items(s))
            for v, cnt in stored.items():
                if brute.get(v, 0) != cnt:
                    mismatches.append([list(v), s])
        checks.append(_check("reflection/oracle", {"k": k, "s_max": s_cap}, [], mismatches))

    # loop-free inclusion-exclusion vs brute enumeration
    for k in range(3, min(k_max, 4) + 1):
        pair_cap = 5
        table = ChamberTable.build(k, 2 * pair_cap + 1)
        mismatches = []
        for pairs in range(pair_cap + 1):
            brute = brute_walk_profile(k, 2 * pairs, BRAID_WALK, True, "W")
            points = set(brute) | {v for v, _ in table.slice_items(2 * pairs + 1)}
            for v in points:
                if loop_free_even_count(table, v, pairs) != brute.get(v, 0):
                    mismatches.append([list(v), pairs])
        checks.append(_check("loop-free/inclusion-exclusion", {"k": k, "pair_max": pair_cap}, [], mismatches))

    # bijection round trips and distinctness
    for k in range(2, k_max + 1):
        n_bij = min(n_max, 6)
        universe = enum_filtered(n_bij, k)
        bad = []
        for p in universe:
            walk = encode_partition(p, k)
            if decode_partition(walk) != p:
                bad.append(p.to_text())
        walks = _complete_partition_walks(k, n_bij)
        decoded = [decode_partition(w) for w in walks]
        distinct = len({p.blocks for p in decoded})
        ok = (
            not bad
            and len(walks) == len(universe)
            and distinct == len(universe)
        )
        checks.append(
            _check(
                "bijection/round-trip",
                {"k": k, "n": n_bij},
                [len(universe), len(universe), []],
                [len(walks), distinct, bad],
            )
        )

    passed = all(c["pass"] for c in checks)
    return {
        "passed": passed,
        "total": len(checks),
        "failed": sum(not c["pass"] for c in checks),
        "checks": checks,
    }


def _complete_partition_walks(k: int, n: int):
    """Every complete partition walk of length 2n, by DFS over legal steps."""
    from .walks import Walk, legal_steps, apply_step

    out = []
    steps: list[int] = []

    def rec(pos: int, rows):
        if pos == 2 * n:
            if rows == ():
                out.append(Walk(PARTITION_WALK, k, tuple(steps)))
            return
        parity = "odd" if (pos + 1) % 2 else "even"
        for st in legal_steps(rows, k, parity, PARTITION_WALK):
            steps.append(st)
            rec(pos + 1, apply_step(rows, st))
            steps.pop()

    rec(0, ())
    return out
