"""Hand-transcribed configurations and digraphs used across the tests."""

import random

from charlier_gf.configs import CharlierConfig, ColoredDigraph, DigraphTuple


def ten_point_config():
    return CharlierConfig.from_cycles(range(1, 11), [(7,), (4, 9, 6), (1, 5, 10, 3)])


N12 = {5, 8, 9, 11, 14, 16, 17}
N13 = {1, 2, 6, 12, 15}
N23 = {3, 4, 7, 10, 13, 18}

SIGMA = {
    1: [(9, 16, 15), (1, 12, 11, 8)],
    2: [(5, 17, 8, 11), (3, 10, 7, 4, 18)],
    3: [(6, 13), (1, 10, 7, 18, 4)],
}
A_SETS = {
    1: {1, 8, 9, 11, 12, 15, 16},
    2: {3, 4, 5, 7, 8, 10, 11, 17, 18},
    3: {1, 4, 6, 7, 10, 13, 18},
}
B_SETS = {
    1: {2, 5, 6, 14, 17},
    2: {9, 13, 14, 16},
    3: {2, 3, 12, 15},
}


def eighteen_point_tuple():
    configs = [
        CharlierConfig.from_cycles(N12 | N13, SIGMA[1]),
        CharlierConfig.from_cycles(N12 | N23, SIGMA[2]),
        CharlierConfig.from_cycles(N13 | N23, SIGMA[3]),
    ]
    return DigraphTuple.from_blocks(3, {(1, 2): N12, (1, 3): N13, (2, 3): N23}, configs)


BIG_COMPONENT = {1, 3, 4, 5, 7, 8, 10, 11, 12, 17, 18}

# splice out 3, 5, 12, 17 (each in one permutation only)
REDUCED_EDGES = {
    (1, 11, 1), (11, 8, 1), (8, 1, 1),
    (8, 11, 2), (11, 8, 2), (18, 10, 2), (10, 7, 2), (7, 4, 2), (4, 18, 2),
    (1, 10, 3), (10, 7, 3), (7, 18, 3), (18, 4, 3), (4, 1, 3),
}
REDUCED_MEMBERS = {
    1: [(1, "A"), (3, "A")],
    4: [(2, "A"), (3, "A")],
    7: [(2, "A"), (3, "A")],
    8: [(1, "A"), (2, "A")],
    10: [(2, "A"), (3, "A")],
    11: [(1, "A"), (2, "A")],
    18: [(2, "A"), (3, "A")],
}


def reduced_big_component():
    return ColoredDigraph.build(REDUCED_MEMBERS, REDUCED_EDGES, REDUCED_MEMBERS)


def random_reduced(rng: random.Random):
    """A reduced digraph: every vertex in exactly two permutations."""
    k = rng.randint(2, 4)
    m = rng.randint(1, 8)
    members = {}
    for v in range(1, m + 1):
        i, j = sorted(rng.sample(range(1, k + 1), 2))
        members[v] = [(i, "A"), (j, "A")]
    edges = set()
    for col in range(1, k + 1):
        vs = [v for v in members if any(c == col for c, _ in members[v])]
        image = vs[:]
        rng.shuffle(image)
        edges |= {(v, w, col) for v, w in zip(vs, image)}
    return k, ColoredDigraph.build(members, edges, members)


def random_insertions(rng: random.Random, k: int, d: ColoredDigraph, first_label: int = 100):
    label = first_label
    out = {}
    for src, _, col in sorted(d.edges):
        if rng.random() < 0.5:
            continue
        seq = []
        for _ in range(rng.randint(1, 3)):
            seq.append((label, rng.choice([j for j in range(1, k + 1) if j != col])))
            label += 1
        out[(src, col)] = tuple(seq)
    return out
