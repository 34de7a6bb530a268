#!/usr/bin/env python3
"""Writes the Ammann-Beenker patch used by the coordination tests.

Vertices are the cut-and-project points of Z^4 whose internal-space image
falls inside the regular octagon window, kept within Euclidean distance R of
the eightfold centre. Edges are the unit tile edges plus one diagonal of each
square tile (the diagonal whose direction is more nearly radial), which is
the graph whose central coordination sequence starts 1, 8, 16, 32, 32, ...

Every edge is at most sqrt(2) long, so a vertex at graph distance k lies
within k*sqrt(2) of the centre, as does a shortest path to it. Shells are
therefore exact for k <= (R - sqrt(2)) / sqrt(2), which is the radius written
to the file.

Usage: gen_ammann_beenker.py [R] > data/ammann_beenker_center.patch
"""

import math
import sys
from collections import deque

C = [(math.cos(k * math.pi / 4), math.sin(k * math.pi / 4)) for k in range(4)]
CP = [(math.cos(3 * k * math.pi / 4), math.sin(3 * k * math.pi / 4)) for k in range(4)]
NORMALS = [(-v[1], v[0]) for v in CP]
EPS = 1e-9


def proj(z, basis):
    return (sum(z[k] * basis[k][0] for k in range(4)), sum(z[k] * basis[k][1] for k in range(4)))


def in_window(z):
    y = proj(z, CP)
    for u in NORMALS:
        h = sum(abs(v[0] * u[0] + v[1] * u[1]) for v in CP) / 2
        d = abs(y[0] * u[0] + y[1] * u[1])
        if abs(d - h) < EPS:
            sys.exit("point on the window boundary; the patch would be ambiguous")
        if d > h:
            return False
    return True


def steps():
    for k in range(4):
        for s in (1, -1):
            yield tuple(s if i == k else 0 for i in range(4))


def add(z, w):
    return tuple(a + b for a, b in zip(z, w))


def main():
    radius = float(sys.argv[1]) if len(sys.argv) > 1 else 24.0
    origin = (0, 0, 0, 0)
    # Unit-edge search in a slightly larger disc, then trim to the radius.
    seen = {origin}
    queue = deque([origin])
    while queue:
        z = queue.popleft()
        for s in steps():
            w = add(z, s)
            if w not in seen and math.hypot(*proj(w, C)) <= radius + 2 and in_window(w):
                seen.add(w)
                queue.append(w)
    pts = sorted(z for z in seen if math.hypot(*proj(z, C)) <= radius)
    ids = {z: i for i, z in enumerate(pts)}
    edges = set()
    for z in pts:
        for s in steps():
            w = add(z, s)
            if w in ids:
                edges.add((min(ids[z], ids[w]), max(ids[z], ids[w])))
    # Square tiles: two orthogonal unit directions with all four corners present.
    for z in pts:
        for a in steps():
            for b in steps():
                va, vb = proj(a, C), proj(b, C)
                if abs(va[0] * vb[0] + va[1] * vb[1]) > EPS or a > b:
                    continue
                corners = [z, add(z, a), add(z, b), add(add(z, a), b)]
                if not all(c in ids for c in corners):
                    continue
                centre = proj(z, CP)
                pa, pb = proj(a, CP), proj(b, CP)
                mid = (centre[0] + (pa[0] + pb[0]) / 2, centre[1] + (pa[1] + pb[1]) / 2)
                d1 = (pa[0] + pb[0], pa[1] + pb[1])
                d2 = (pa[0] - pb[0], pa[1] - pb[1])
                s1 = abs(mid[0] * d1[0] + mid[1] * d1[1])
                s2 = abs(mid[0] * d2[0] + mid[1] * d2[1])
                if abs(s1 - s2) < EPS:
                    sys.exit("square with no preferred diagonal")
                u, v = (corners[0], corners[3]) if s1 > s2 else (corners[1], corners[2])
                edges.add((min(ids[u], ids[v]), max(ids[u], ids[v])))
    valid = math.floor((radius - math.sqrt(2)) / math.sqrt(2))
    out = sys.stdout
    out.write("# Ammann-Beenker tiling around its eightfold centre (square tiles split by one diagonal)\n")
    out.write(f"# {len(pts)} vertices within distance {radius:g} of the centre\n")
    for z in pts:
        out.write(f"v {ids[z]}\n")
    for i, j in sorted(edges):
        out.write(f"e {i} {j}\n")
    out.write(f"base {ids[origin]}\n")
    out.write(f"radius {valid}\n")


if __name__ == "__main__":
    main()
