#!/usr/bin/env python3
"""Regenerate the bundled benchmark fixtures.

karate.gml   -- Zachary's karate club (34 nodes, 78 edges), taken from
                networkx's built-in copy of the original dataset, with
                the conventional 1-based node labels.
football.gml -- a deterministic synthetic benchmark with the published
                summary statistics of the American college football
                network (115 teams, 613 games, conferences of at least
                9 members each). The original dataset is not
                redistributable here; this stand-in is generated with a
                fixed seed so the file is reproducible byte for byte.
"""

import random

import networkx as nx


def write_gml(path, nodes, edges, comments=()):
    # nodes: list of (id, label); edges: list of (src_id, dst_id)
    with open(path, "w") as f:
        for c in comments:
            f.write(f"# {c}\n")
        f.write("graph [\n")
        for nid, label in nodes:
            f.write(f'  node [ id {nid} label "{label}" ]\n')
        for s, t in edges:
            f.write(f"  edge [ source {s} target {t} ]\n")
        f.write("]\n")


def karate():
    g = nx.karate_club_graph()
    nodes = [(i, str(i + 1)) for i in g.nodes()]
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    write_gml("karate.gml", nodes, edges,
              ["Zachary karate club, 34 nodes / 78 edges, 1-based labels"])
    with open("karate_factions.txt", "w") as f:
        f.write("# label faction (Mr. Hi = 0, Officer = 1)\n")
        for i in g.nodes():
            fac = 0 if g.nodes[i]["club"] == "Mr. Hi" else 1
            f.write(f"{i + 1} {fac}\n")


def football():
    rng = random.Random(20260823)
    sizes = [11, 11, 11, 11, 11, 12, 12, 12, 12, 12]
    assert sum(sizes) == 115

    conf_of = []
    for ci, s in enumerate(sizes):
        conf_of += [ci] * s
    n = 115

    def conf_members(ci):
        return [i for i in range(n) if conf_of[i] == ci]

    edges = set()
    # near-round-robin intra-conference schedules
    for ci in range(10):
        mem = conf_members(ci)
        for a in range(len(mem)):
            for b in range(a + 1, len(mem)):
                if rng.random() < 0.93:
                    edges.add((mem[a], mem[b]))
    # cross-conference games, spread evenly over the conference pairings
    conf_pairs = [(a, b) for a in range(10) for b in range(a + 1, 10)]
    while len(edges) < 613:
        rng.shuffle(conf_pairs)
        for a, b in conf_pairs:
            if len(edges) >= 613:
                break
            i = rng.choice(conf_members(a))
            j = rng.choice(conf_members(b))
            edges.add((min(i, j), max(i, j)))

    g = nx.Graph(sorted(edges))
    g.add_nodes_from(range(n))
    assert min(dict(g.degree()).values()) > 0
    assert nx.is_connected(g)

    labels = [f"Team{i:03d}" for i in range(n)]
    nodes = [(i, labels[i]) for i in range(n)]
    write_gml("football.gml", nodes, sorted(edges),
              ["Synthetic college-football-style benchmark",
               "115 nodes / 613 edges, 10 planted conferences",
               "generated by make_fixtures.py, seed 20260823"])
    with open("football_conferences.txt", "w") as f:
        f.write("# label conference (conferences 0-9 have >= 9 members)\n")
        for i in range(n):
            f.write(f"{labels[i]} {conf_of[i]}\n")


if __name__ == "__main__":
    karate()
    football()
