"""Brute-force gasket enumeration, independent of the package under test.

A circle is stored as the triple (b, b*x, b*y) of its bend and
bend-times-center.  Swapping one circle of a mutually tangent quadruple
for its mirror image is linear in these coordinates: the replacement of
c_i is 2*(c_j + c_k + c_l) - c_i, applied to all three components at
once.  BFS over quadruples with exact arithmetic, pruning any child
circle whose bend exceeds the bound, enumerates every circle of the
gasket up to that bound.
"""

from fractions import Fraction

# outer circle, two unit circles, one of the two bend-3 circles
ROOT = (
    (Fraction(-1), Fraction(0), Fraction(0)),
    (Fraction(2), Fraction(1), Fraction(0)),
    (Fraction(2), Fraction(-1), Fraction(0)),
    (Fraction(3), Fraction(0), Fraction(2)),
)


def gasket_circles(bound, root=ROOT):
    """All distinct circles (b, b*x, b*y) of the gasket with b <= bound."""
    bound = Fraction(bound)
    root = tuple(tuple(Fraction(v) for v in c) for c in root)
    circles = set(root)
    seen = {frozenset(root)}
    queue = [root]
    while queue:
        quad = queue.pop()
        total = [sum(c[k] for c in quad) for k in range(3)]
        for i in range(4):
            new = tuple(2 * total[k] - 3 * quad[i][k] for k in range(3))
            if new[0] > bound:
                continue
            child = quad[:i] + (new,) + quad[i + 1 :]
            key = frozenset(child)
            if key in seen:
                continue
            seen.add(key)
            circles.add(new)
            queue.append(child)
    return circles


def gasket_bends(bound, root=ROOT):
    """Sorted bends multiset of the gasket up to the bound."""
    return sorted(c[0] for c in gasket_circles(bound, root))
