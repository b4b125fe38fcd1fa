"""Verify the two shipped seven-point certificates.

Both distance matrices describe seven plane points with pairwise integer
distances, no three on a line and no four on a circle.  The checker
recomputes everything from scratch in exact arithmetic: triangle
inequalities, an exact planar embedding, all 35 collinearity triples,
all 35 concyclicity quadruples, the characteristic of all 35 triangles,
and canonicity of the labeling.
"""

from pathlib import Path

from intpoints import parse_matrix_text, verify

DATA = Path(__file__).resolve().parent.parent / "data"

for name in ("heptagon1.txt", "heptagon2.txt"):
    matrix = parse_matrix_text((DATA / name).read_text())
    print(f"--- {name} ---")
    report = verify(matrix)
    for line in report.lines():
        print(line)
    print()

# Tamper with one entry and watch the verification fail: the point set
# is overdetermined, so a single changed distance breaks realizability.
rows = [list(r) for r in parse_matrix_text((DATA / "heptagon1.txt").read_text()).rows]
rows[5][6] += 1
rows[6][5] = rows[5][6]
print("--- heptagon1 with d(6,7) off by one ---")
for line in verify(rows).lines():
    print(line)
