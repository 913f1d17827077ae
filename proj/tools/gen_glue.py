#!/usr/bin/env python3
"""Writes data/niemeier_glue.json: glue generators of the 23 Niemeier lattices
with roots, as rational vectors in simple-root coordinates.

Glue words use the usual class labels: A_n class [k] is the dual vector of
path node k; D_n classes [1], [2], [3] are the two spinor classes and the
vector class; E6 classes [1], [2]; E7 class [1]. Every generator is checked
again by the C++ loader, so this script only transcribes.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

FAMILY_ORDER = {"E": 2, "D": 1, "A": 0}


def cartan(family, n):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2

    def link(a, b):
        g[a][b] = g[b][a] = 1

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 1, n - 3)
    else:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 1, 2)
    return g


def inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        p = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def class_node(family, n, k):
    """Node whose dual vector represents glue class [k] (None for [0])."""
    if k == 0:
        return None
    if family == "A":
        return k - 1
    if family == "D":
        return {1: n - 2, 2: 0, 3: n - 1}[k]
    if family == "E" and n == 6:
        return {1: 0, 2: 4}[k]
    if family == "E" and n == 7:
        return {1: 5}[k]
    raise ValueError(f"no class {k} for {family}{n}")


def cyclic(head, tail):
    return [head + tail[i:] + tail[:i] for i in range(len(tail))]


def even_permutations(seq):
    from itertools import permutations

    out = []
    for p in permutations(range(len(seq))):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        if inv % 2 == 0:
            out.append([seq[i] for i in p])
    return out


# (label, components in conventional order, glue words)
TABLE = [
    ("D24", ["D24"], [[1]]),
    ("D16E8", ["D16", "E8"], [[1, 0]]),
    ("E8^3", ["E8", "E8", "E8"], []),
    ("A24", ["A24"], [[5]]),
    ("D12^2", ["D12", "D12"], [[1, 2], [2, 1]]),
    ("A17E7", ["A17", "E7"], [[3, 1]]),
    ("D10E7^2", ["D10", "E7", "E7"], [[1, 1, 0], [3, 0, 1]]),
    ("A15D9", ["A15", "D9"], [[2, 1]]),
    ("D8^3", ["D8", "D8", "D8"], cyclic([], [1, 2, 2])),
    ("A12^2", ["A12", "A12"], [[1, 5]]),
    ("A11D7E6", ["A11", "D7", "E6"], [[1, 1, 1]]),
    ("E6^4", ["E6"] * 4, cyclic([1], [0, 1, 2])),
    ("A9^2D6", ["A9", "A9", "D6"], [[2, 4, 0], [5, 0, 1], [0, 5, 3]]),
    ("D6^4", ["D6"] * 4, even_permutations([0, 1, 2, 3])),
    ("A8^3", ["A8"] * 3, cyclic([], [1, 1, 4])),
    ("A7^2D5^2", ["A7", "A7", "D5", "D5"], [[1, 1, 1, 2], [1, 7, 2, 1]]),
    ("A6^4", ["A6"] * 4, cyclic([1], [2, 1, 6])),
    ("A5^4D4", ["A5"] * 4 + ["D4"], [w + [0] for w in cyclic([2], [0, 2, 4])]
     + [[3, 3, 0, 0, 1], [3, 0, 3, 0, 2], [3, 0, 0, 3, 3]]),
    ("D4^6", ["D4"] * 6, [[1] * 6, [2] * 6] + cyclic([0], [0, 2, 3, 3, 2])),
    ("A4^6", ["A4"] * 6, cyclic([1], [0, 1, 4, 4, 1])),
    ("A3^8", ["A3"] * 8, cyclic([3], [2, 0, 0, 1, 0, 1, 1])),
    ("A2^12", ["A2"] * 12, cyclic([2], [1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2])),
    ("A1^24", ["A1"] * 24, cyclic([1], [int(c) for c in "00000101001100110101111"])),
]


def sort_key(t):
    return (FAMILY_ORDER[t[0]], int(t[1:]))


def main(out_path):
    lattices = []
    for label, comps, words in TABLE:
        order = sorted(range(len(comps)), key=lambda i: sort_key(comps[i]), reverse=True)
        ordered = [comps[i] for i in order]
        inverses = {c: inverse(cartan(c[0], int(c[1:]))) for c in set(comps)}
        glue = []
        for word in words:
            vec = []
            for i in order:
                c, k = comps[i], word[i]
                n = int(c[1:])
                node = class_node(c[0], n, k)
                vec += [Fraction(0)] * n if node is None else inverses[c][node]
            glue.append([str(x) for x in vec])
        lattices.append({"label": label, "components": ordered, "glue": glue})
    doc = {"format": "niemeier-glue", "version": 1, "lattices": lattices}
    lines = ['{', ' "format": "niemeier-glue",', ' "version": 1,', ' "lattices": [']
    for n, lat in enumerate(lattices):
        lines.append('  {"label": %s, "components": %s, "glue": [' % (json.dumps(lat["label"]), json.dumps(lat["components"])))
        rows = ['    ' + json.dumps(g) for g in lat["glue"]]
        lines.append(',\n'.join(rows)) if rows else None
        lines.append('  ]}' + (',' if n + 1 < len(lattices) else ''))
    lines += [' ]', '}']
    Path(out_path).write_text('\n'.join(lines) + '\n')


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "data" / "niemeier_glue.json"))
