"""Exact big-integer counting of chamber-confined walks.

Three tables back the samplers and the CLI:

* OrthantTable      counts of partition-kind walks from the start point that
                    stay in the nonnegative orthant, all endpoints/lengths.
* ChamberTable      counts of chamber-confined partition walks, assembled
                    from orthant counts by a signed sum over coordinate
                    permutations.  One table per (k, max length).
* LoopFreeTable     counts of chamber-confined braid walks with no loop
                    vertex, built from chamber counts by inclusion-exclusion
                    (even lengths) and a one-step recursion (odd lengths).

All counts are exact Python ints; no floating point is involved anywhere.

Chamber slices are stored packed (sorted key array + offset array + one
bytes blob per length) because a sampling session at k=3, n=800 holds on
the order of 10^7 entries whose values run to hundreds of digits.  A
session-sized table also prunes to the "diamond" of states a length-S walk
can actually visit: a point with b boxes is kept at length s only when b
boxes can still be shed in s steps and accumulated in S - s steps.  Lookups
outside the pruned region either return a provable zero or raise.

`chamber_count` is a deliberately separate dynamic program, confined to the
chamber directly with no reflection; it exists as an independent oracle for
the assembled tables and is used only at test scales.
"""

from __future__ import annotations

import bisect
from array import array
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from .walks import (
    BRAID_WALK,
    PARTITION_WALK,
    in_chamber,
    in_orthant,
    start_point,
    step_class,
)


class TableLimitError(RuntimeError):
    """A requested table would exceed the configured entry budget."""


class InvariantError(RuntimeError):
    """A signed assembly produced a negative count, or totals disagree."""


# ---------------------------------------------------------------------------
# point packing
# ---------------------------------------------------------------------------

def _coord_bits(k: int, max_len: int) -> int:
    top = (k - 2) + (max_len + 3) // 2
    return max(4, top.bit_length() + 1)


def _packer(k: int, bits: int):
    """pack/unpack between coordinate tuples and ints; lexicographic order
    on tuples equals numeric order on packed keys."""
    shifts = tuple(bits * (k - 2 - i) for i in range(k - 1))

    def pack(v: tuple[int, ...]) -> int:
        key = 0
        for x, sh in zip(v, shifts):
            key |= x << sh
        return key

    mask = (1 << bits) - 1

    def unpack(key: int) -> tuple[int, ...]:
        return tuple((key >> sh) & mask for sh in shifts)

    return pack, unpack, shifts


@lru_cache(maxsize=None)
def signed_permutations(k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """(sign, index tuple) for every permutation of the k-1 coordinates."""
    out = []
    for perm in permutations(range(k - 1)):
        inv = sum(
            1
            for a in range(k - 1)
            for b in range(a + 1, k - 1)
            if perm[a] > perm[b]
        )
        out.append((-1 if inv % 2 else 1, perm))
    return tuple(out)


# ---------------------------------------------------------------------------
# rolling slice advance (shared by OrthantTable and ChamberTable builds)
# ---------------------------------------------------------------------------

def _advance_slice(prev: dict, k: int, shifts, bits: int, adding: bool,
                   cap: int | None, base: int) -> dict:
    """One step of the orthant recursion on packed-int keyed slices.

    prev maps packed point -> count at length s-1; the result is the same
    map at length s.  Remove steps require the touched coordinate to be
    positive; `cap` (when given) drops any target with more than `cap`
    boxes, which is safe for session tables because such states can no
    longer influence any reachable lookup.
    """
    out: dict = {}
    get = out.get
    mask = (1 << bits) - 1
    ones = tuple(1 << sh for sh in shifts)
    for key, val in prev.items():
        if cap is not None:
            boxes = -base
            for sh in shifts:
                boxes += (key >> sh) & mask
        else:
            boxes = 0
        if cap is None or boxes <= cap:
            out[key] = get(key, 0) + val
        if adding:
            if cap is not None and boxes + 1 > cap:
                continue
            for one in ones:
                q = key + one
                out[q] = get(q, 0) + val
        else:
            if cap is not None and boxes - 1 > cap:
                continue
            for one, sh in zip(ones, shifts):
                if (key >> sh) & mask:
                    q = key - one
                    out[q] = get(q, 0) + val
    return out


# ---------------------------------------------------------------------------
# orthant table
# ---------------------------------------------------------------------------

class OrthantTable:
    """Counts of orthant-confined partition walks from the start point.

    Slices are plain dicts keyed by coordinate tuple; this table is meant
    for moderate lengths (tests, oracles, odd-length feeds).  Session-scale
    work goes through ChamberTable, which never materializes all slices.
    """

    def __init__(self, k: int, max_len: int, slices: list[dict]):
        self.k = k
        self.max_len = max_len
        self._slices = slices

    def count(self, v: tuple[int, ...], s: int) -> int:
        if len(v) != self.k - 1 or not in_orthant(v):
            raise ValueError(f"point {v} is not in the orthant for k={self.k}")
        if not 0 <= s <= self.max_len:
            raise ValueError(f"length {s} outside table range 0..{self.max_len}")
        return self._slices[s].get(v, 0)

    def slice_items(self, s: int):
        return self._slices[s].items()


def _estimate_entries(k: int, max_len: int, horizon: int | None) -> int:
    total = 0
    for s in range(max_len + 1):
        b = s // 2
        if horizon is not None:
            b = min(b, horizon - s + 1)
        if b < 0:
            continue
        total += (b + k) ** (k - 1) // factorial(k - 1)
    return total


def build_orthant_table(
    k: int, max_len: int, *, max_entries: int = 80_000_000
) -> OrthantTable:
    """All orthant walk counts up to max_len.  Raises TableLimitError when
    the state count estimate exceeds max_entries."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    est = _estimate_entries(k, max_len, None)
    if est > max_entries:
        raise TableLimitError(
            f"orthant table for k={k}, max_len={max_len} needs ~{est} entries"
            f" (limit {max_entries})"
        )
    bits = _coord_bits(k, max_len)
    pack, unpack, shifts = _packer(k, bits)
    base = sum(start_point(k))
    cur = {pack(start_point(k)): 1}
    slices = [{start_point(k): 1}]
    for s in range(1, max_len + 1):
        adding = step_class(s, PARTITION_WALK) == "add"
        cur = _advance_slice(cur, k, shifts, bits, adding, None, base)
        slices.append({unpack(key): val for key, val in cur.items()})
    return OrthantTable(k, max_len, slices)


def reflected_count(at: OrthantTable, v: tuple[int, ...], s: int) -> int:
    """Chamber-confined walk count via the signed permutation sum over
    orthant counts.  Requires v in the chamber."""
    if len(v) != at.k - 1 or not in_chamber(v):
        raise ValueError(f"point {v} is not in the chamber for k={at.k}")
    total = 0
    for sign, perm in signed_permutations(at.k):
        total += sign * at.count(tuple(v[i] for i in perm), s)
    if total < 0:
        raise InvariantError(f"negative reflected count at {v}, length {s}")
    return total


# ---------------------------------------------------------------------------
# packed chamber slices
# ---------------------------------------------------------------------------

class _PackedSlice:
    """Sorted packed keys, offsets, and big-endian value bytes for one length."""

    __slots__ = ("keys", "offsets", "blob")

    def __init__(self, entries: dict):
        keys = sorted(entries)
        if keys and keys[-1] <= 0x7FFF_FFFF_FFFF_FFFF:
            self.keys = array("q", keys)
        else:
            self.keys = keys
        offsets = array("Q", [0]) if keys else array("Q", [0])
        chunks = []
        pos = 0
        for key in keys:
            val = entries[key]
            chunk = val.to_bytes((val.bit_length() + 7) // 8 or 1, "big")
            chunks.append(chunk)
            pos += len(chunk)
            offsets.append(pos)
        self.offsets = offsets
        self.blob = b"".join(chunks)

    def get(self, key: int) -> int:
        keys = self.keys
        i = bisect.bisect_left(keys, key)
        if i == len(keys) or keys[i] != key:
            return 0
        off = self.offsets
        return int.from_bytes(self.blob[off[i] : off[i + 1]], "big")

    def __len__(self) -> int:
        return len(self.keys)

    def items(self, unpack):
        off = self.offsets
        blob = self.blob
        for i, key in enumerate(self.keys):
            yield unpack(key), int.from_bytes(blob[off[i] : off[i + 1]], "big")


class ChamberTable:
    """Chamber-confined partition-walk counts for all endpoints and lengths.

    Built once per (k, max_len); immutable afterwards and safe to share.
    With horizon=S (a session's total walk length) the table stores only
    states a complete length-S walk can visit, and count() raises on
    queries outside that envelope rather than return an unvetted zero.
    """

    def __init__(self, k: int, max_len: int, horizon: int | None,
                 slices: list[_PackedSlice]):
        self.k = k
        self.max_len = max_len
        self.horizon = horizon
        self._slices = slices
        self._pack, self._unpack, _ = _packer(k, _coord_bits(k, max_len))
        self._base = sum(start_point(k))

    @classmethod
    def build(
        cls,
        k: int,
        max_len: int,
        *,
        horizon: int | None = None,
        max_entries: int = 80_000_000,
    ) -> "ChamberTable":
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        if horizon is not None and horizon != max_len:
            raise ValueError("horizon, when set, must equal max_len")
        est = _estimate_entries(k, max_len, horizon)
        if est > max_entries:
            raise TableLimitError(
                f"chamber table for k={k}, max_len={max_len} needs ~{est}"
                f" entries (limit {max_entries})"
            )
        bits = _coord_bits(k, max_len)
        pack, unpack, shifts = _packer(k, bits)
        base = sum(start_point(k))
        perms = signed_permutations(k)
        delta = start_point(k)
        cur = {pack(delta): 1}
        slices = [_PackedSlice({pack(delta): 1})]
        for s in range(1, max_len + 1):
            adding = step_class(s, PARTITION_WALK) == "add"
            cap = horizon - s + 1 if horizon is not None else None
            cur = _advance_slice(cur, k, shifts, bits, adding, cap, base)
            store_bound = (horizon - s) // 2 if horizon is not None else None
            entries: dict = {}
            get = cur.get
            for key in cur:
                v = unpack(key)
                ok = True
                prev = None
                for x in v:
                    if prev is not None and x >= prev:
                        ok = False
                        break
                    prev = x
                if not ok:
                    continue
                if store_bound is not None and sum(v) - base > store_bound:
                    continue
                total = 0
                for sign, perm in perms:
                    total += sign * get(pack(tuple(v[i] for i in perm)), 0)
                if total < 0:
                    raise InvariantError(
                        f"negative chamber count at {v}, length {s}"
                    )
                if total:
                    entries[key] = total
            slices.append(_PackedSlice(entries))
        return cls(k, max_len, horizon, slices)

    def count(self, v: tuple[int, ...], s: int) -> int:
        if len(v) != self.k - 1 or not in_chamber(v):
            raise ValueError(f"point {v} is not in the chamber for k={self.k}")
        if not 0 <= s <= self.max_len:
            raise ValueError(
                f"length {s} outside table range 0..{self.max_len}"
            )
        boxes = sum(v) - self._base
        if boxes > s // 2:
            return 0
        if self.horizon is not None and boxes > (self.horizon - s) // 2:
            raise ValueError(
                f"point {v} at length {s} lies outside the horizon envelope"
            )
        return self._slices[s].get(self._pack(v))

    def slice_items(self, s: int):
        """Iterate (point, count) over the stored support at length s."""
        return self._slices[s].items(self._unpack)

    def entry_count(self) -> int:
        return sum(len(sl) for sl in self._slices)


# ---------------------------------------------------------------------------
# loop-free braid-walk table
# ---------------------------------------------------------------------------

def loop_free_even_count(ct: ChamberTable, v: tuple[int, ...], pairs: int) -> int:
    """Loop-free braid walks of length 2*pairs ending at v, by
    inclusion-exclusion over the number of loop vertices:

        sum_h (-1)^h C(pairs, h) * chamber(v, 2*(pairs-h) + 1)

    Braid walks of length 2m biject with partition walks of length 2m+1,
    and a loop vertex can be spliced into any of the `pairs` vertex slots.
    """
    need = 2 * pairs + 1
    if need > ct.max_len:
        raise ValueError(
            f"chamber table of length >= {need} required, have {ct.max_len}"
        )
    total = 0
    for h in range(pairs + 1):
        term = comb(pairs, h) * ct.count(v, 2 * (pairs - h) + 1)
        total += -term if h % 2 else term
    if total < 0:
        raise InvariantError(f"negative loop-free count at {v}, 2*{pairs}")
    return total


class LoopFreeTable:
    """Loop-free braid-walk counts for all endpoints and lengths <= walk_len."""

    def __init__(self, k: int, walk_len: int, slices: list[dict]):
        self.k = k
        self.max_len = walk_len
        self._slices = slices
        self._base = sum(start_point(k))

    @classmethod
    def build(cls, k: int, walk_len: int, ct: ChamberTable | None = None) -> "LoopFreeTable":
        if k < 3:
            raise ValueError(f"k must be >= 3 for loop-free braid counts, got {k}")
        if walk_len % 2:
            raise ValueError(f"walk_len must be even, got {walk_len}")
        if ct is None:
            ct = ChamberTable.build(k, walk_len + 1)
        if ct.k != k or ct.max_len < walk_len + 1:
            raise ValueError(
                f"chamber table of length >= {walk_len + 1} for k={k} required"
            )
        slices: list[dict] = [{start_point(k): 1}]
        for s in range(1, walk_len + 1):
            entries: dict = {}
            if s % 2 == 0:
                pairs = s // 2
                for v, _ in ct.slice_items(s + 1):
                    val = loop_free_even_count(ct, v, pairs)
                    if val:
                        entries[v] = val
            else:
                # odd step of a braid walk adds a box (or nothing)
                prev = slices[s - 1]
                get = entries.get
                for p, val in prev.items():
                    entries[p] = get(p, 0) + val
                    for i in range(k - 1):
                        q = p[:i] + (p[i] + 1,) + p[i + 1 :]
                        if in_chamber(q):
                            entries[q] = get(q, 0) + val
            slices.append(entries)
        return cls(k, walk_len, slices)

    def count(self, v: tuple[int, ...], s: int) -> int:
        if len(v) != self.k - 1 or not in_chamber(v):
            raise ValueError(f"point {v} is not in the chamber for k={self.k}")
        if not 0 <= s <= self.max_len:
            raise ValueError(
                f"length {s} outside table range 0..{self.max_len}"
            )
        if sum(v) - self._base > (s + 1) // 2:
            return 0
        return self._slices[s].get(v, 0)

    def slice_items(self, s: int):
        return self._slices[s].items()

    def entry_count(self) -> int:
        return sum(len(sl) for sl in self._slices)


def loop_free_odd_count(lt: LoopFreeTable, v: tuple[int, ...], s: int) -> int:
    """One-step recursion for odd lengths: the final odd step adds a box
    (or does nothing), so sum loop-free counts over the possible origins."""
    if s % 2 == 0:
        raise ValueError(f"length must be odd, got {s}")
    total = lt.count(v, s - 1)
    for i in range(lt.k - 1):
        q = v[:i] + (v[i] - 1,) + v[i + 1 :]
        if in_chamber(q):
            total += lt.count(q, s - 1)
    return total


# ---------------------------------------------------------------------------
# independent chamber oracle (direct DP, no reflection)
# ---------------------------------------------------------------------------

_oracle_slices: dict[tuple, list] = {}


def _oracle_extend(k: int, kind: str, loop_free: bool, upto: int) -> list:
    key = (k, kind, loop_free)
    slices = _oracle_slices.setdefault(key, [{start_point(k): 1}])
    while len(slices) <= upto:
        s = len(slices)
        cls = step_class(s, kind)
        prev = slices[s - 1]
        cur: dict = {}
        get = cur.get
        track = loop_free and kind == BRAID_WALK
        for state, val in prev.items():
            p = state[0] if track and s % 2 == 0 else state
            pending = state[1] if track and s % 2 == 0 else False
            for r in range(0, k):
                if r == 0:
                    q = p
                elif cls == "add":
                    q = p[: r - 1] + (p[r - 1] + 1,) + p[r:]
                else:
                    q = p[: r - 1] + (p[r - 1] - 1,) + p[r:]
                if not in_chamber(q):
                    continue
                if track:
                    if s % 2 == 1:
                        new = (q, cls == "add" and r == 1)
                    else:
                        if pending and cls == "remove" and r == 1:
                            continue
                        new = q
                else:
                    new = q
                cur[new] = get(new, 0) + val
        slices.append(cur)
    return slices


def chamber_count(
    k: int,
    v: tuple[int, ...],
    s: int,
    kind: str = PARTITION_WALK,
    loop_free: bool = False,
    *,
    max_len_guard: int = 512,
) -> int:
    """Direct chamber-confined DP count; the independent oracle.

    For kind="P" this equals the reflected chamber count.  For kind="B" it
    counts braid walks (loop_free excludes vertices that add to and remove
    from row 1), matching the inclusion-exclusion route.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if s > max_len_guard:
        raise TableLimitError(f"oracle guarded at length <= {max_len_guard}")
    if len(v) != k - 1 or not in_chamber(v):
        raise ValueError(f"point {v} is not in the chamber for k={k}")
    slices = _oracle_extend(k, kind, loop_free, s)
    track = loop_free and kind == BRAID_WALK
    if track and s % 2 == 1:
        return slices[s].get((v, False), 0) + slices[s].get((v, True), 0)
    return slices[s].get(v, 0)


# ---------------------------------------------------------------------------
# totals
# ---------------------------------------------------------------------------

def total_partitions(k: int, n: int, table: ChamberTable | None = None) -> int:
    """Number of partitions of [n] with no k mutually crossing arcs."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    if table is None:
        table = ChamberTable.build(k, 2 * n, horizon=2 * n)
    return table.count(start_point(k), 2 * n)


def total_regular(k: int, n: int, table: LoopFreeTable | None = None) -> int:
    """Number of 2-regular, k-noncrossing partitions of [n]."""
    if k < 3:
        raise ValueError(f"k must be >= 3 for regular counting, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    if table is None:
        table = LoopFreeTable.build(k, 2 * (n - 1))
    return table.count(start_point(k), 2 * (n - 1))
