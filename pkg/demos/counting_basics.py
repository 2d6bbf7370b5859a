"""
Exact counting of k-noncrossing partitions
==========================================

A partition of {1, ..., n} is k-noncrossing when its arc diagram never
contains k arcs that all cross each other.  For small n every partition
qualifies (a k-crossing needs 2k vertices), so the counts start out as the
Bell numbers and then fall behind them.
"""

from nckp import ChamberTable, LoopFreeTable, total_partitions, total_regular


def bell_numbers(limit):
    triangle = [[1]]
    for _ in range(limit):
        prev = triangle[-1]
        nxt = [prev[-1]]
        for x in prev:
            nxt.append(nxt[-1] + x)
        triangle.append(nxt)
    return [t[0] for t in triangle]


bells = bell_numbers(11)

print("n:      ", *[f"{n:>8}" for n in range(11)])
print("Bell:   ", *[f"{b:>8}" for b in bells])
for k in (2, 3, 4):
    table = ChamberTable.build(k, 20)
    counts = [total_partitions(k, n, table) for n in range(11)]
    print(f"k={k}:    ", *[f"{c:>8}" for c in counts])

# k=2 gives the Catalan numbers; k=3 first deviates from Bell at n=6,
# where exactly one partition ({1,4}{2,5}{3,6}) has a 3-crossing.

print()
print("2-regular (no block contains neighbours i, i+1):")
for k in (3, 4):
    table = LoopFreeTable.build(k, 18)
    counts = [total_regular(k, n, table) for n in range(11)]
    print(f"k={k}:    ", *[f"{c:>8}" for c in counts])

# Counts stay exact at any size; only time and memory limit the range.
big = total_partitions(3, 100)
print()
print(f"3-noncrossing partitions of [100]: {big}")
print(f"  ({len(str(big))} digits)")
