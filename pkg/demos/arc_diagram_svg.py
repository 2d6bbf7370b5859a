"""
Arc-diagram rendering
=====================

Draws sampled partitions as arc diagrams (vertices on a line, one
semicircular path per arc) and writes a standalone SVG file.
"""

from nckp import SamplerSession
from nckp.render import render_svg

session = SamplerSession(k=3, n=14, mode="plain", seed=2)
partitions = [session.draw()[1] for _ in range(5)]
for p in partitions:
    print(p.to_text())

svg = render_svg(partitions)
with open("arc_diagrams.svg", "w", encoding="utf-8") as fh:
    fh.write(svg + "\n")
print()
print(f"wrote arc_diagrams.svg ({len(svg)} bytes, "
      f"{sum(len(p.arcs) for p in partitions)} arcs)")
