"""
Uniform random generation
=========================

Sampling works by walking through a sequence of Young-diagram shapes.  At
every step each candidate next shape is weighted by the exact number of
ways the walk can still finish, so the product of the transition
probabilities telescopes to 1/count: every partition is equally likely,
not approximately but as a rational identity.
"""

from collections import Counter
from fractions import Fraction

from nckp import SamplerSession, path_probability, total_partitions

# --- every outcome equally often -------------------------------------

session = SamplerSession(k=3, n=4, mode="plain", seed=42)
freq = Counter()
for _ in range(15_000):
    _, p = session.draw()
    freq[p.to_text()] += 1

print(f"all {total_partitions(3, 4)} partitions of [4], 15000 draws:")
for text, count in sorted(freq.items()):
    print(f"  {text:<14} {count:>5}")

# --- the telescoping identity, exactly -------------------------------

session = SamplerSession(k=3, n=12, mode="plain", seed=7)
walk, partition = session.draw()
prob = path_probability(session, walk)
print()
print("one sampled walk:", walk.to_text())
print("decodes to:      ", partition.to_text())
print(f"probability:      {prob}  (universe size {session.total})")
assert prob * session.total == Fraction(1)

# --- 2-regular mode ---------------------------------------------------

session = SamplerSession(k=3, n=12, mode="regular", seed=7)
print()
print("2-regular samples (no i, i+1 in one block):")
for _ in range(4):
    _, p = session.draw()
    print(" ", p.to_text())
