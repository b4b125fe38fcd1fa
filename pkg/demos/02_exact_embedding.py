"""Embed a distance matrix in the plane with exact coordinates.

Every realizable integral point set lives in Q(sqrt(k))^2 where k is its
characteristic: x-coordinates are rational and y-coordinates are rational
multiples of sqrt(k).  The embedding below is exact, so re-deriving the
distance matrix from the coordinates reproduces it bit for bit.
"""

from pathlib import Path

from intpoints import distances_from_embedding, embed, parse_matrix_text

DATA = Path(__file__).resolve().parent.parent / "data"

matrix = parse_matrix_text((DATA / "heptagon1.txt").read_text())
embedding = embed(matrix)

print(f"radicand k = {embedding.k}")
for i, (x, q) in enumerate(embedding.points):
    print(f"p{i + 1} = ({x}, {q} * sqrt({embedding.k}))")

roundtrip = distances_from_embedding(embedding)
print("\nround trip reproduces the matrix:", roundtrip == matrix)

# The same works for any realizable matrix; a 3-4-5 triangle has
# characteristic 1, so its coordinates are plainly rational.
triangle = parse_matrix_text("3\n0 5 4\n5 0 3\n4 3 0")
e = embed(triangle)
print("\n3-4-5 triangle:", ", ".join(f"({x}, {q})" for x, q in e.points))
