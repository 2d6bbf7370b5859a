"""
Walks, tableaux and arc diagrams
================================

The engine never samples partitions directly; it samples walks.  A
partition of [n] corresponds to a walk of 2n steps through Young-diagram
shapes with at most k-1 rows: at vertex i the walk may first remove a box
(closing an arc into i) and then add one (opening an arc out of i).  The
row-insertion decoder recovers the arcs.
"""

from nckp import (
    Partition,
    decode_partition,
    encode_partition,
    max_crossing,
    partition_to_braid,
    walk_from_text,
)

# --- decode a walk, step by step --------------------------------------

walk = walk_from_text("P", 3, ". +1 . +2 -2 . -1 .")
print("walk:  ", walk.to_text())
for i, rows in enumerate(walk.shapes()):
    print(f"  after step {i}: shape {rows or '(empty)'}")
p = decode_partition(walk)
print("decodes to:", p.to_text(), "with arcs", p.arcs_text())

# The removal at vertex 3 bumped entry 1 out of the tableau: arc (1,3).
# The crossing pair (1,3), (2,4) is exactly what needed the second row.

# --- round trip --------------------------------------------------------

assert encode_partition(p, 3).steps == walk.steps

# --- crossings cap the row count ---------------------------------------

triple = Partition.from_blocks(6, [(1, 4), (2, 5), (3, 6)])
print()
print("partition:", triple.to_text())
print("largest crossing set:", max_crossing(triple).witness)
try:
    encode_partition(triple, 3)
except ValueError as exc:
    print("cannot fit in two rows:", exc)

# --- braids -------------------------------------------------------------

print()
p = Partition.from_blocks(5, [(1, 3), (2,), (4, 5)])
braid = partition_to_braid(p)
print(f"partition {p.to_text()} -> braid on [4]: {braid.to_text()}")
print("the gap-one arc (4,5) became the loop (4,4)")
