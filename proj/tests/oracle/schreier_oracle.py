#!/usr/bin/env python3
"""Independent rule-application oracle for Schreier-ball fixtures.

Points are handled as long unrolled strings and rewritten with the prefix
rules for x0, x1 and their inverses; canonical forms are found by brute-force
search for the shortest preperiod and then the shortest period. Nothing here
shares code with the C++ library.

Usage: schreier_oracle.py OUTDIR
"""
import json
import sys
from collections import deque

RULES = {
    "a": [("0", "00"), ("10", "01"), ("11", "1")],
    "A": [("00", "0"), ("01", "10"), ("1", "11")],
    "b": [("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")],
    "B": [("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")],
}
ORDER = "aAbB"


def seq(prefix, tail, n):
    s = prefix
    while len(s) < n:
        s += tail
    return s[:n]


def brute_canonical(prefix, tail):
    """Shortest (preperiod, period) describing prefix + tail^omega."""
    window = len(prefix) + 4 * len(tail) + 8
    s = seq(prefix, tail, 2 * window)
    for p in range(len(prefix) + len(tail) + 1):
        for q in range(1, len(tail) + 1):
            if all(s[i] == s[i + q] for i in range(p, window)):
                return s[:p], s[p:p + q]
    raise AssertionError("no period found")


def apply(point, letter):
    v, w = point
    s = seq(v, w, len(v) + 3 * len(w) + 3)
    tail_start = len(s)
    # s is followed by the continuation of w^omega from offset (len(s)-len(v)) % len(w)
    off = (tail_start - len(v)) % len(w)
    tail = w[off:] + w[:off]
    for src, dst in RULES[letter]:
        if s.startswith(src):
            return brute_canonical(dst + s[len(src):], tail)
    raise AssertionError("no rule")


def name(point):
    return point[0] + "(" + point[1] + ")"


def explore(seed, radius):
    verts = [seed]
    dist = {seed: 0}
    queue = deque([seed])
    while queue:
        p = queue.popleft()
        if dist[p] == radius:
            continue
        for letter in ORDER:
            q = apply(p, letter)
            if q not in dist:
                dist[q] = dist[p] + 1
                verts.append(q)
                queue.append(q)
    index = {p: i for i, p in enumerate(verts)}
    edges = []
    for i, p in enumerate(verts):
        for letter, label in (("a", "x0"), ("b", "x1")):
            q = apply(p, letter)
            if q in index:
                edges.append((i, label, index[q]))
    return verts, edges


def dot(verts, edges):
    out = ["digraph schreier {"]
    for i, p in enumerate(verts):
        out.append('  "%s"%s;' % (name(p), " [peripheries=2]" if i == 0 else ""))
    for s, label, t in edges:
        out.append('  "%s" -> "%s" [label="%s"];' % (name(verts[s]), name(verts[t]), label))
    out.append("}")
    return "\n".join(out) + "\n"


SEEDS = ["0", "1", "1|0", "0|1", "10|0100", "|0100", "|01", "11|01", "|1001", "10|011"]


def main():
    outdir = sys.argv[1]
    verts, edges = explore(brute_canonical("1", "0"), 4)
    with open(outdir + "/half_r4.dot", "w") as f:
        f.write(dot(verts, edges))
    counts = {}
    for spec in SEEDS:
        v, _, w = spec.rpartition("|") if "|" in spec else ("", "", spec)
        seed = brute_canonical(v, w)
        rows = []
        for r in range(7):
            vs, es = explore(seed, r)
            rows.append([len(vs), len(es)])
        counts[name(seed)] = rows
    with open(outdir + "/ball_counts.json", "w") as f:
        lines = ['  "%s": %s' % (k, json.dumps(counts[k])) for k in sorted(counts)]
        f.write("{\n" + ",\n".join(lines) + "\n}\n")


if __name__ == "__main__":
    main()
