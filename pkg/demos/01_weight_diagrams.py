"""
Weight diagrams of sl(3) modules
================================

Every weight is a pair (x, y) in the basis of fundamental weights.  The
multiplicity of a weight comes from a closed formula; Freudenthal's
recursion gives the same numbers the slow way.
"""

from a2fusion import dimension, freudenthal_diagram, mult, weight_diagram

# The adjoint module V(1, 1): six roots and a two-dimensional zero weight space.
adjoint = weight_diagram((1, 1))
for w, m in sorted(adjoint.items()):
    print(f"{tuple(w)!s:>10}  {m}")
print("dimension", sum(adjoint.values()), "=", dimension((1, 1)))

# Draw V(4, 2) as text.  Rows are indexed by y, columns by x; dots are
# lattice points with multiplicity 0.
lam = (4, 2)
diagram = weight_diagram(lam)
xs = [w.x for w in diagram]
ys = [w.y for w in diagram]
for y in range(max(ys), min(ys) - 1, -1):
    row = ""
    for x in range(min(xs), max(xs) + 1):
        m = diagram.get((x, y), 0)
        row += f"{m:>3}" if m else "  ."
    print(row)

# Dominant weights only: multiplicities grow by one per hexagonal shell
# until the shells turn into triangles, then stay flat.
for w in sorted((w for w in diagram if w.x >= 0 and w.y >= 0), key=lambda w: -(w.x + w.y)):
    print(tuple(w), mult(lam, w))

# The two methods agree on every diagram we can be bothered to print.
assert all(weight_diagram((a, b)) == freudenthal_diagram((a, b)) for a in range(6) for b in range(6))
