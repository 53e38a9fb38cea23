#!/usr/bin/env python3
"""Rebuild the DIMACS clique benchmark graphs from their combinatorial definitions.

johnson8-2-4   2-subsets of an 8-set, adjacent when disjoint
johnson8-4-4   4-subsets of an 8-set, adjacent when they share at most 2 points
hamming6-4     6-bit words, adjacent when Hamming distance >= 4
MANN_a9        clique formulation of the Steiner triple problem on STS(9)

Usage: gen_clq.py OUTDIR
"""
import itertools
import os
import sys


def write(path, n, edges, comment):
    edges = sorted(set(edges))
    with open(path, "w") as f:
        f.write(f"c {comment}\n")
        f.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"e {u} {v}\n")


def johnson(n, w, max_common):
    verts = list(itertools.combinations(range(n), w))
    edges = []
    for a, b in itertools.combinations(range(len(verts)), 2):
        if len(set(verts[a]) & set(verts[b])) <= max_common:
            edges.append((a + 1, b + 1))
    return len(verts), edges


def hamming(bits, dist):
    n = 1 << bits
    edges = [(a + 1, b + 1) for a, b in itertools.combinations(range(n), 2) if bin(a ^ b).count("1") >= dist]
    return n, edges


def mann_a9():
    # Lines of AG(2,3): the 12 triples of STS(9).
    pts = [(x, y) for x in range(3) for y in range(3)]
    lines = set()
    for p, q in itertools.combinations(pts, 2):
        r = ((-p[0] - q[0]) % 3, (-p[1] - q[1]) % 3)
        lines.add(tuple(sorted(pts.index(t) for t in (p, q, r))))
    lines = sorted(lines)
    assert len(lines) == 12
    # One vertex per (line, point on line), then one per point.
    verts = [("lp", li, p) for li, line in enumerate(lines) for p in line] + [("p", None, p) for p in range(9)]
    conflict = set()
    for a, b in itertools.combinations(range(len(verts)), 2):
        va, vb = verts[a], verts[b]
        if va[0] == "lp" and vb[0] == "lp" and va[1] == vb[1]:
            conflict.add((a, b))
        elif va[0] == "lp" and vb[0] == "p" and va[2] == vb[2]:
            conflict.add((a, b))
    edges = [(a + 1, b + 1) for a, b in itertools.combinations(range(len(verts)), 2) if (a, b) not in conflict]
    return len(verts), edges


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "."
    os.makedirs(out, exist_ok=True)
    for name, (n, e) in {
        "johnson8-2-4": johnson(8, 2, 0),
        "johnson8-4-4": johnson(8, 4, 2),
        "hamming6-4": hamming(6, 4),
        "MANN_a9": mann_a9(),
    }.items():
        write(os.path.join(out, name + ".clq"), n, e, f"{name}, regenerated by gen_clq.py")
        print(name, n, len(set(e)))


if __name__ == "__main__":
    main()
