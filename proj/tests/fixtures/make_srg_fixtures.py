"""Regenerates the triangle-free SRG graph6 fixtures.

Higman-Sims is built from the Witt design S(3,6,22), which is taken from the
octads of the extended binary Golay code. Gewirtz and the M22 graph are
induced subgraphs of Higman-Sims. The C++ suite re-verifies every file on
load, so this script is provenance only.
"""
import itertools
import pathlib

import networkx as nx

GOLAY_POLY = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # x^11+x^10+x^6+x^5+x^4+x^2+1, low degree first


def golay_octads():
    rows = []
    for shift in range(12):
        word = [0] * 23
        for i, bit in enumerate(GOLAY_POLY):
            word[i + shift] = bit
        rows.append(word)
    octads = set()
    for mask in range(1 << 12):
        word = [0] * 23
        for i in range(12):
            if mask >> i & 1:
                word = [a ^ b for a, b in zip(word, rows[i])]
        word.append(sum(word) % 2)
        if sum(word) == 8:
            octads.add(frozenset(i for i, b in enumerate(word) if b))
    assert len(octads) == 759
    return octads


def higman_sims():
    hexads = [o - {22, 23} for o in golay_octads() if {22, 23} <= o]
    assert len(hexads) == 77
    g = nx.Graph()
    g.add_nodes_from(range(100))
    inf, point, block = 0, 1, 23
    for p in range(22):
        g.add_edge(inf, point + p)
    for b, h in enumerate(hexads):
        for p in h:
            g.add_edge(point + p, block + b)
    for (a, ha), (b, hb) in itertools.combinations(enumerate(hexads), 2):
        if not ha & hb:
            g.add_edge(block + a, block + b)
    return g


def main():
    out = pathlib.Path(__file__).parent
    hs = higman_sims()
    m22 = nx.convert_node_labels_to_integers(hs.subgraph(set(hs) - {0} - set(hs[0])))
    u, v = 0, 1
    gewirtz = nx.convert_node_labels_to_integers(
        hs.subgraph(set(hs) - {u, v} - set(hs[u]) - set(hs[v])))
    for name, g in [("higman_sims", hs), ("mesner_m22", m22), ("gewirtz", gewirtz)]:
        data = nx.to_graph6_bytes(g, header=False)
        (out / f"{name}.g6").write_bytes(data)
        print(name, g.number_of_nodes(), g.number_of_edges())


if __name__ == "__main__":
    main()
