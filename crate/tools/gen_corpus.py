#!/usr/bin/env python3
"""Generate a reference corpus of connected plane graphs in planar_code.

Independent of the Rust enumerator: every connected planar graph from the
networkx graph atlas (all graphs on <= 7 vertices) is expanded into all of its
rotation systems, genus-0 systems are kept, and embeddings are deduplicated by
a canonical BFS code taken over every starting dart in both orientations
(mirror images are identified). 3-connected graphs take their unique
embedding straight from the planarity test.

Usage: gen_corpus.py N_MAX OUT.pc [COUNTS.txt]
"""

import itertools
import sys

import networkx as nx


def faces(rot):
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen = set()
    count = 0
    for u, r in enumerate(rot):
        for v in r:
            if (u, v) in seen:
                continue
            count += 1
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                rb = rot[b]
                nxt = rb[(pos[b][a] + 1) % len(rb)]
                a, b = b, nxt
    # an edgeless connected graph is a single vertex in one face
    return max(count, 1)


def code_from(rot, root, first, step, best):
    n = len(rot)
    label = [0] * n
    ref = [0] * n
    label[root] = 1
    ref[root] = first
    order = [root]
    nxt = 2
    out = []
    k = 0
    decided = best is None
    while k < len(order):
        x = order[k]
        k += 1
        r = rot[x]
        d = len(r)
        for j in range(d):
            w = r[(ref[x] + step * j) % d]
            if label[w] == 0:
                label[w] = nxt
                nxt += 1
                ref[w] = rot[w].index(x)
                order.append(w)
            out.append(label[w])
            if not decided:
                i = len(out) - 1
                if out[i] < best[i]:
                    decided = True
                elif out[i] > best[i]:
                    return None
        out.append(0)
        if not decided:
            i = len(out) - 1
            if out[i] < best[i]:
                decided = True
            elif out[i] > best[i]:
                return None
    return out


def canonical(rot):
    if len(rot) == 1:
        return (0,)
    best = None
    for root, r in enumerate(rot):
        for first in range(len(r)):
            for step in (1, -1):
                c = code_from(rot, root, first, step, best)
                if c is not None and (best is None or c < best):
                    best = c
    return tuple(best)


def embeddings(g):
    if g.number_of_nodes() >= 4 and nx.node_connectivity(g) >= 3:
        # Whitney: a 3-connected planar graph has one embedding up to mirroring
        _, emb = nx.check_planarity(g)
        yield [list(emb.neighbors_cw_order(v)) for v in sorted(g.nodes())]
        return
    nodes = sorted(g.nodes())
    n = len(nodes)
    m = g.number_of_edges()
    nbrs = [sorted(g.neighbors(v)) for v in nodes]
    choices = []
    for r in nbrs:
        if len(r) <= 2:
            choices.append([list(r)])
        else:
            head, rest = r[0], r[1:]
            choices.append([[head] + list(p) for p in itertools.permutations(rest)])
    target = m - n + 2
    for rot in itertools.product(*choices):
        if faces(rot) == target:
            yield [list(r) for r in rot]


def encode(rot):
    out = [len(rot)]
    for r in rot:
        out.extend(w + 1 for w in r)
        out.append(0)
    return bytes(out)


def main():
    n_max = int(sys.argv[1])
    out_path = sys.argv[2]
    counts_path = sys.argv[3] if len(sys.argv) > 3 else None
    seen = set()
    graphs = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > n_max or not nx.is_connected(g):
            continue
        if not nx.check_planarity(g)[0]:
            continue
        for rot in embeddings(g):
            key = canonical(rot)
            if key not in seen:
                seen.add(key)
                graphs.append((n, g.number_of_edges(), key, rot))
    graphs.sort(key=lambda t: t[:3])
    with open(out_path, "wb") as f:
        f.write(b">>planar_code<<")
        for _, _, _, rot in graphs:
            f.write(encode(rot))
    if counts_path:
        per_n = {}
        for n, _, _, _ in graphs:
            per_n[n] = per_n.get(n, 0) + 1
        with open(counts_path, "w") as f:
            for n in sorted(per_n):
                f.write(f"{n} {per_n[n]}\n")
    print(len(graphs), "graphs")


if __name__ == "__main__":
    main()
