"""Naive exhaustive oracles for the small-n censuses.

K4^3-free l2 maxima by scanning every edge subset; colored Mantel and
tripartite triangle-free maxima by scanning every 2-graph. Iso classes are
counted with full permutation minimisation.
"""
import sys
from itertools import combinations, permutations


def k43_census(n):
    triples = list(combinations(range(n), 3))
    idx = {t: i for i, t in enumerate(triples)}
    quads = []
    for q in combinations(range(n), 4):
        m = 0
        for t in combinations(q, 3):
            m |= 1 << idx[t]
        quads.append(m)
    pairs = list(combinations(range(n), 2))
    pair_masks = []
    for p in pairs:
        m = 0
        for i, t in enumerate(triples):
            if p[0] in t and p[1] in t:
                m |= 1 << i
        pair_masks.append(m)
    best, arg = -1, []
    for s in range(1 << len(triples)):
        if any((s & q) == q for q in quads):
            continue
        v = sum(bin(s & pm).count("1") ** 2 for pm in pair_masks)
        if v > best:
            best, arg = v, [s]
        elif v == best:
            arg.append(s)
    classes = set()
    for s in arg:
        es = [triples[i] for i in range(len(triples)) if s >> i & 1]
        canon = min(tuple(sorted(tuple(sorted(p[x] for x in e)) for e in es))
                    for p in permutations(range(n)))
        classes.add(canon)
    return best, len(arg), len(classes), sorted(classes)


FORBIDDEN = {(0, 1, 2), (0, 0, 1), (1, 1, 2), (0, 2, 2)}


def mantel(n):
    col = [0] * n + [1] * n + [2] * n
    V = 3 * n
    pairs = list(combinations(range(V), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    tris = []
    for t in combinations(range(V), 3):
        if tuple(sorted(col[v] for v in t)) in FORBIDDEN:
            tris.append((1 << pidx[(t[0], t[1])]) | (1 << pidx[(t[0], t[2])]) | (1 << pidx[(t[1], t[2])]))
    be, bl, ae, al = -1, -1, [], []
    for s in range(1 << len(pairs)):
        if any((s & m) == m for m in tris):
            continue
        e = bin(s).count("1")
        deg = [0] * V
        for i, (a, b) in enumerate(pairs):
            if s >> i & 1:
                deg[a] += 1
                deg[b] += 1
        l = sum(d * d for d in deg)
        if e > be:
            be, ae = e, [s]
        elif e == be:
            ae.append(s)
        if l > bl:
            bl, al = l, [s]
        elif l == bl:
            al.append(s)
    return be, len(ae), bl, len(al)


def tripartite(n):
    col = [0] * n + [1] * n + [2] * n
    V = 3 * n
    pairs = [p for p in combinations(range(V), 2) if col[p[0]] != col[p[1]]]
    pidx = {p: i for i, p in enumerate(pairs)}
    tris = []
    for t in combinations(range(V), 3):
        if len({col[v] for v in t}) == 3:
            tris.append((1 << pidx[(t[0], t[1])]) | (1 << pidx[(t[0], t[2])]) | (1 << pidx[(t[1], t[2])]))
    best, cnt = -1, 0
    for s in range(1 << len(pairs)):
        if any((s & m) == m for m in tris):
            continue
        e = bin(s).count("1")
        if e > best:
            best, cnt = e, 1
        elif e == best:
            cnt += 1
    return best, cnt


if __name__ == "__main__":
    for n in [3, 4, 5] + ([6] if "--six" in sys.argv else []):
        best, raw, ncls, cls = k43_census(n)
        print("k43 n=%d optimum=%d raw=%d classes=%d" % (n, best, raw, ncls))
        for c in cls:
            print("   ", c)
    for n in [1, 2]:
        print("mantel n=%d (edges opt, #graphs, l2 opt, #graphs) =" % n, mantel(n))
        print("tripartite n=%d (opt, #graphs) =" % n, tripartite(n))
