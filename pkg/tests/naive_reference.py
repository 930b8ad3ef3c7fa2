"""Independent brute-force reference oracle for the tests.

Enumerates every per-gap ordering outright and counts interleaved same-disk
chord pairs directly; no pruning, no search, no shared code with the
package's engine beyond the drawing conventions themselves.
"""

import itertools

V = -1


def crossings(curves, orders, n, tally):
    base = {}
    off = 0
    for g in range(n + 1):
        base[g] = off
        off += len(orders.get(g, ()))
        if g == 0:
            base[V] = off
            off += 1
    pos = {}
    for g, pts in orders.items():
        for i, p in enumerate(pts):
            pos[p] = base[g] + i
    chords = []
    for ci, (points, closed, h0) in enumerate(curves):
        m = len(points)
        if m < 2:
            continue
        steps = [(j, j + 1) for j in range(m - 1)]
        if closed:
            steps.append((m - 1, 0))
        for k, (a, b) in enumerate(steps):
            ga, gb = points[a], points[b]
            if ga == V and gb == V:
                continue
            pa = base[V] if ga == V else pos[(ci, a)]
            pb = base[V] if gb == V else pos[(ci, b)]
            chords.append((pa, pb, (h0 + k) % 2, ci, ga == V or gb == V))
    total = 0
    for i in range(len(chords)):
        a1, b1, d1, c1, v1 = chords[i]
        for j in range(i + 1, len(chords)):
            a2, b2, d2, c2, v2 = chords[j]
            if d1 != d2 or (v1 and v2):
                continue
            if tally == "self" and c1 != c2:
                continue
            if tally == "inter" and c1 == c2:
                continue
            lo, hi = (a1, b1) if a1 < b1 else (b1, a1)
            if (lo < a2 < hi) != (lo < b2 < hi):
                total += 1
    return total


def minimize(curves, n, tally):
    gap_pts = {g: [] for g in range(n + 1)}
    for ci, (points, _closed, _h0) in enumerate(curves):
        for j, g in enumerate(points):
            if g != V:
                gap_pts[g].append((ci, j))
    gaps = list(range(n + 1))
    best = None
    for perms in itertools.product(*[itertools.permutations(gap_pts[g]) for g in gaps]):
        value = crossings(curves, dict(zip(gaps, perms)), n, tally)
        if best is None or value < best:
            best = value
    return best


def self_v(inner, n=2):
    return minimize([([V] + list(inner) + [V], False, 0)], n, "self")


def self_x(word, n=1, h0=0):
    return minimize([(list(word), True, h0)], n, "self")


def self_segment(letters, n=2):
    return min(minimize([(list(letters), False, h)], n, "self") for h in (0, 1))


def pair(curve_a, curve_b, n=2):
    return minimize([curve_a, curve_b], n, "inter")
