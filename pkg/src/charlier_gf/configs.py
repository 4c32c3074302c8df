"""Charlier configurations, the tuple set H and its superimposed digraphs.

A Charlier configuration on a label set S is ``((A, sigma), B)`` with
``(A, B)`` an ordered partition of S and ``sigma`` a permutation of A.  An
element of H for ``k`` colours on ``[n]`` assigns every label to a block
``N_ij`` (``i < j``) and carries one configuration per colour ``i`` on
``N_i``, the union of the blocks touching ``i``.  Superimposing the k
configurations gives an edge-coloured digraph in which every vertex carries
exactly two memberships.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .charlier import EnumerationCapError
from .polyring import ParamSet, Polynomial

DEFAULT_CONFIG_CAP = 10
DEFAULT_H_BUDGET = {2: 6, 3: 4}


class BudgetError(EnumerationCapError):
    """Raised when an enumeration of H exceeds its budget."""


class NotType3Error(ValueError):
    pass


class LabelCollisionError(ValueError):
    pass


def multilinear_ring(k: int) -> ParamSet:
    """a1..ak, r1..rk, then x_ij for i < j in lexicographic order."""
    names = [f"a{i}" for i in range(1, k + 1)] + [f"r{i}" for i in range(1, k + 1)]
    names += [f"x{i}{j}" for i, j in itertools.combinations(range(1, k + 1), 2)]
    return ParamSet(names)


def _canonical_cycles(sigma: Mapping[int, int]) -> tuple[tuple[int, ...], ...]:
    seen = set()
    cycles = []
    for start in sorted(sigma):
        if start in seen:
            continue
        cycle = []
        v = start
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = sigma[v]
        cycles.append(tuple(cycle))
    return tuple(cycles)


@dataclass(frozen=True)
class CharlierConfig:
    """A Charlier configuration; ``cycles`` is the canonical cycle form of sigma.

    Each cycle starts at its minimum and cycles are sorted by minimum.
    """

    labels: frozenset
    A: frozenset
    B: frozenset
    cycles: tuple

    def __post_init__(self):
        if self.A & self.B or (self.A | self.B) != self.labels:
            raise ValueError("(A, B) must be an ordered partition of the label set")
        covered = [v for c in self.cycles for v in c]
        if len(covered) != len(set(covered)) or set(covered) != self.A:
            raise ValueError("cycles of sigma must exactly cover A")
        if self.cycles != _canonical_cycles(self.sigma):
            raise ValueError("cycles are not in canonical form")

    @classmethod
    def from_cycles(cls, labels: Iterable[int], cycles: Iterable[Iterable[int]]) -> CharlierConfig:
        """Build from any cycle notation; points of ``labels`` outside the cycles form B."""
        sigma = {}
        for cycle in cycles:
            cycle = tuple(cycle)
            for v, w in zip(cycle, cycle[1:] + cycle[:1]):
                if v in sigma:
                    raise ValueError(f"label {v} appears twice")
                sigma[v] = w
        labels = frozenset(labels)
        A = frozenset(sigma)
        return cls(labels, A, labels - A, _canonical_cycles(sigma))

    @classmethod
    def from_mapping(cls, labels: Iterable[int], sigma: Mapping[int, int]) -> CharlierConfig:
        labels = frozenset(labels)
        A = frozenset(sigma)
        if set(sigma.values()) != A:
            raise ValueError("sigma is not a permutation of its domain")
        return cls(labels, A, labels - A, _canonical_cycles(sigma))

    @property
    def sigma(self) -> dict[int, int]:
        out = {}
        for cycle in self.cycles:
            for v, w in zip(cycle, cycle[1:] + cycle[:1]):
                out[v] = w
        return out

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        def fmt(s):
            return "{" + ",".join(map(str, sorted(s))) + "}"

        sig = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles) or "()"
        return f"A={fmt(self.A)} B={fmt(self.B)} sigma={sig}"


def _lex_subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    yield ()
    for i, x in enumerate(items):
        for rest in _lex_subsets(items[i + 1:]):
            yield (x,) + rest


def enumerate_configs(labels: Iterable[int], cap: int = DEFAULT_CONFIG_CAP) -> Iterator[CharlierConfig]:
    """Every Charlier configuration on ``labels`` exactly once.

    Order: by A as a sorted tuple (lexicographic), then by sigma in
    lexicographic one-line order.
    """
    items = sorted(set(labels))
    if len(items) > cap:
        raise EnumerationCapError(f"|S|={len(items)} exceeds the configuration cap {cap}")
    label_set = frozenset(items)
    for A in _lex_subsets(items):
        A_set = frozenset(A)
        B_set = label_set - A_set
        for image in itertools.permutations(A):
            sigma = dict(zip(A, image))
            yield CharlierConfig(label_set, A_set, B_set, _canonical_cycles(sigma))


def count_configs(n: int) -> int:
    """sum_m binom(n, m) m!"""
    return sum(math.comb(n, m) * math.factorial(m) for m in range(n + 1))


def config_weight(c: CharlierConfig, a="a", r="r") -> Polynomial:
    """a^(cycles of sigma) * r^|B|."""
    if isinstance(a, str):
        ring = ParamSet((a, r))
        a, r = ring.vars()
    return a ** c.num_cycles * r ** len(c.B)


@dataclass(frozen=True)
class DigraphTuple:
    """An element ((N_ij), Phi_1, ..., Phi_k) of H.

    ``blocks[v - 1]`` is the pair ``(i, j)``, ``i < j``, whose block holds
    label ``v``; ``configs[i - 1]`` is Phi_i, a configuration on N_i.
    """

    n: int
    k: int
    blocks: tuple
    configs: tuple

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("H needs k >= 2")
        if len(self.blocks) != self.n or len(self.configs) != self.k:
            raise ValueError("block assignment or configuration list has the wrong length")
        for i, j in self.blocks:
            if not 1 <= i < j <= self.k:
                raise ValueError(f"bad block pair {(i, j)}")
        for i in range(1, self.k + 1):
            if self.configs[i - 1].labels != self.N_i(i):
                raise ValueError(f"Phi_{i} is not a configuration on N_{i}")

    @classmethod
    def from_blocks(
        cls, k: int, blocks: Mapping[tuple[int, int], Iterable[int]], configs: Sequence[CharlierConfig]
    ) -> DigraphTuple:
        owner = {}
        for pair, labels in blocks.items():
            pair = tuple(sorted(pair))
            for v in labels:
                if v in owner:
                    raise ValueError(f"label {v} is in two blocks")
                owner[v] = pair
        n = len(owner)
        if set(owner) != set(range(1, n + 1)):
            raise ValueError("blocks must partition [n]")
        return cls(n, k, tuple(owner[v] for v in range(1, n + 1)), tuple(configs))

    @classmethod
    def _unchecked(cls, n, k, blocks, configs) -> DigraphTuple:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "blocks", blocks)
        object.__setattr__(obj, "configs", configs)
        return obj

    def N(self, i: int, j: int) -> frozenset:
        pair = (min(i, j), max(i, j))
        return frozenset(v for v, p in enumerate(self.blocks, 1) if p == pair)

    def N_i(self, i: int) -> frozenset:
        return frozenset(v for v, p in enumerate(self.blocks, 1) if i in p)

    def block_sizes(self) -> dict[tuple[int, int], int]:
        sizes = {p: 0 for p in itertools.combinations(range(1, self.k + 1), 2)}
        for p in self.blocks:
            sizes[p] += 1
        return sizes

    def __str__(self) -> str:
        sizes = self.block_sizes()
        parts = []
        for p in sizes:
            labels = ",".join(str(v) for v, q in enumerate(self.blocks, 1) if q == p)
            parts.append(f"N{p[0]}{p[1]}={{{labels}}}")
        parts += [f"Phi{i}: {c}" for i, c in enumerate(self.configs, 1)]
        return " | ".join(parts)


def _check_budget(k: int, n: int, budget: Mapping[int, int] | None, force: bool) -> None:
    if k < 2:
        raise ValueError("H needs k >= 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    if force:
        return
    budget = DEFAULT_H_BUDGET if budget is None else budget
    if k not in budget or n > budget[k]:
        raise BudgetError(f"H(k={k}, n={n}) exceeds the enumeration budget {dict(budget)}")


def _block_assignments(k: int, n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    return itertools.product(pairs, repeat=n)


def enumerate_H(
    k: int, n: int, budget: Mapping[int, int] | None = None, force: bool = False
) -> Iterator[DigraphTuple]:
    """Stream every tuple of H(k, n).

    Block assignments run in lexicographic order over labels 1..n (pairs in
    lexicographic order); for each, configurations Phi_1..Phi_k vary in
    :func:`enumerate_configs` order with Phi_k fastest.
    """
    _check_budget(k, n, budget, force)
    cache: dict[frozenset, list[CharlierConfig]] = {}
    for blocks in _block_assignments(k, n):
        lists = []
        for i in range(1, k + 1):
            N_i = frozenset(v for v, p in enumerate(blocks, 1) if i in p)
            if N_i not in cache:
                cache[N_i] = list(enumerate_configs(N_i, cap=max(n, DEFAULT_CONFIG_CAP)))
            lists.append(cache[N_i])
        for configs in itertools.product(*lists):
            yield DigraphTuple._unchecked(n, k, blocks, configs)


def _ring_vars(ring: ParamSet, k: int):
    a = [ring.var(f"a{i}") for i in range(1, k + 1)]
    r = [ring.var(f"r{i}") for i in range(1, k + 1)]
    x = {(i, j): ring.var(f"x{i}{j}") for i, j in itertools.combinations(range(1, k + 1), 2)}
    return a, r, x


def tuple_weight(t: DigraphTuple, params: ParamSet | None = None) -> Polynomial:
    """prod_i a_i^cyc(sigma_i) r_i^|B_i| * prod_{i<j} x_ij^|N_ij|."""
    ring = multilinear_ring(t.k) if params is None else params
    exps = {}
    for i, c in enumerate(t.configs, 1):
        exps[f"a{i}"] = c.num_cycles
        exps[f"r{i}"] = len(c.B)
    for (i, j), size in t.block_sizes().items():
        exps[f"x{i}{j}"] = size
    return ring.monomial(exps)


def sum_H_weights(
    k: int, n: int, params: ParamSet | None = None,
    budget: Mapping[int, int] | None = None, force: bool = False,
) -> Polynomial:
    """Total tuple weight over H(k, n), visiting every tuple.

    Each tuple's weight exponents (cycle and B counts per colour) are added
    per tuple; the innermost configuration list is swept with numpy.
    """
    _check_budget(k, n, budget, force)
    ring = multilinear_ring(k) if params is None else params
    base = n + 1
    nbins = base ** (2 * k)
    stats_cache: dict[frozenset, np.ndarray] = {}

    def config_stats(labels: frozenset) -> np.ndarray:
        if labels not in stats_cache:
            stats_cache[labels] = np.array(
                [(c.num_cycles, len(c.B)) for c in enumerate_configs(labels, cap=max(n, DEFAULT_CONFIG_CAP))],
                dtype=np.int64,
            ).reshape(-1, 2)
        return stats_cache[labels]

    totals: dict[tuple[int, ...], np.ndarray] = {}
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    for blocks in _block_assignments(k, n):
        offsets = []
        for i in range(1, k + 1):
            stats = config_stats(frozenset(v for v, p in enumerate(blocks, 1) if i in p))
            offsets.append(stats[:, 0] * base ** (2 * i - 2) + stats[:, 1] * base ** (2 * i - 1))
        counts = np.zeros(nbins, dtype=np.int64)
        last = offsets[-1]
        for head in itertools.product(*(o.tolist() for o in offsets[:-1])):
            counts += np.bincount(last + sum(head), minlength=nbins)
        x_exps = tuple(blocks.count(p) for p in pairs)
        if x_exps in totals:
            totals[x_exps] += counts
        else:
            totals[x_exps] = counts
    terms = {}
    for x_exps, counts in totals.items():
        for flat in np.nonzero(counts)[0].tolist():
            idx = flat
            digits = []
            for _ in range(2 * k):
                idx, d = divmod(idx, base)
                digits.append(d)
            vec = [0] * len(ring)
            for i in range(1, k + 1):
                vec[ring.index(f"a{i}")] = digits[2 * i - 2]
                vec[ring.index(f"r{i}")] = digits[2 * i - 1]
            for (i, j), e in zip(pairs, x_exps):
                vec[ring.index(f"x{i}{j}")] = e
            terms[tuple(vec)] = int(counts[flat])
    return Polynomial.from_terms(ring, terms)


# -- superimposed digraphs ---------------------------------------------------


@dataclass(frozen=True)
class ColoredDigraph:
    """Edge-coloured digraph; ``membership[v]`` lists ``(colour, "A" | "B")``.

    Equality is label-sensitive.
    """

    vertices: frozenset
    edges: frozenset
    membership: tuple = field(default=())

    @classmethod
    def build(cls, vertices, edges, membership: Mapping[int, Iterable[tuple[int, str]]]) -> ColoredDigraph:
        return cls(
            frozenset(vertices),
            frozenset(edges),
            tuple(sorted((v, tuple(sorted(m))) for v, m in membership.items())),
        )

    @property
    def members(self) -> dict[int, tuple[tuple[int, str], ...]]:
        return dict(self.membership)

    def successor(self) -> dict[tuple[int, int], int]:
        """(vertex, colour) -> target of the colour's out-edge."""
        return {(s, c): t for s, t, c in self.edges}

    def restrict(self, vertices: Iterable[int]) -> ColoredDigraph:
        vs = frozenset(vertices)
        return ColoredDigraph(
            vs,
            frozenset(e for e in self.edges if e[0] in vs),
            tuple(m for m in self.membership if m[0] in vs),
        )

    def cycles(self, colour: int) -> list[tuple[int, ...]]:
        succ = {s: t for s, t, c in self.edges if c == colour}
        return list(_canonical_cycles(succ))


def superpose(t: DigraphTuple) -> ColoredDigraph:
    edges = set()
    membership: dict[int, list[tuple[int, str]]] = {v: [] for v in range(1, t.n + 1)}
    for i, c in enumerate(t.configs, 1):
        for v, w in c.sigma.items():
            edges.add((v, w, i))
        for v in c.A:
            membership[v].append((i, "A"))
        for v in c.B:
            membership[v].append((i, "B"))
    return ColoredDigraph.build(range(1, t.n + 1), edges, membership)


def components(g: ColoredDigraph) -> list[ColoredDigraph]:
    """Weakly connected components, ordered by minimum vertex."""
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t, _ in g.edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups: dict[int, list[int]] = {}
    for v in sorted(g.vertices):
        groups.setdefault(find(v), []).append(v)
    return [g.restrict(vs) for vs in sorted(groups.values(), key=min)]


@dataclass(frozen=True)
class Type1:
    i: int
    j: int


@dataclass(frozen=True)
class Type2:
    i: int


@dataclass(frozen=True)
class Type3:
    pass


ComponentType = Type1 | Type2 | Type3


def classify(c: ColoredDigraph, t: DigraphTuple | None = None) -> ComponentType:
    """Type of a connected component of a superimposed digraph.

    ``t`` is accepted for symmetry with the tuple the component came from;
    the component's membership record is sufficient.
    """
    members = c.members
    if not c.edges and len(c.vertices) == 1:
        (v,) = c.vertices
        roles = members[v]
        if all(role == "B" for _, role in roles):
            i, j = sorted(col for col, _ in roles)
            return Type1(i, j)
    colours = {col for _, _, col in c.edges}
    if len(colours) == 1:
        (i,) = colours
        if all(sorted(role for _, role in members[v]) == ["A", "B"] and (i, "A") in members[v]
               for v in c.vertices):
            return Type2(i)
    return Type3()


def component_weight(c: ColoredDigraph, params: ParamSet) -> Polynomial:
    """x_ij per vertex of block ij, r_i per B_i membership, a_i per colour-i cycle."""
    exps: dict[str, int] = {}

    def bump(name, by=1):
        exps[name] = exps.get(name, 0) + by

    for v, roles in c.membership:
        i, j = sorted(col for col, _ in roles)
        bump(f"x{i}{j}")
        for col, role in roles:
            if role == "B":
                bump(f"r{col}")
    for col in sorted({col for _, _, col in c.edges}):
        bump(f"a{col}", len(c.cycles(col)))
    return params.monomial(exps)


def decompose(t: DigraphTuple) -> list[tuple[ColoredDigraph, ComponentType]]:
    return [(comp, classify(comp, t)) for comp in components(superpose(t))]


# -- reduced type-3 digraphs -------------------------------------------------


def _two_perm_vertices(c: ColoredDigraph) -> set[int]:
    return {v for v, roles in c.membership if sum(role == "A" for _, role in roles) == 2}


def _check_type3(c: ColoredDigraph) -> set[int]:
    keep = _two_perm_vertices(c)
    for v, roles in c.membership:
        if not any(role == "A" for _, role in roles):
            raise NotType3Error(f"vertex {v} lies in no permutation")
    colours = {col for _, _, col in c.edges}
    for col in colours:
        for cycle in c.cycles(col):
            if not keep.intersection(cycle):
                raise NotType3Error(f"colour-{col} cycle {cycle} meets no other permutation")
    return keep


def _walks(c: ColoredDigraph, keep: set[int]):
    succ = c.successor()
    members = c.members
    for v in sorted(keep):
        for col, role in members[v]:
            if role != "A":
                continue
            path = []
            w = succ[(v, col)]
            while w not in keep:
                partner = next(j for j, rl in members[w] if j != col)
                path.append((w, partner))
                w = succ[(w, col)]
            yield v, col, w, path


def reduce_type3(c: ColoredDigraph) -> ColoredDigraph:
    """Splice out every vertex lying in a single permutation.

    Each maximal colour-i path through such vertices collapses to one
    colour-i edge between vertices that lie in two permutations.
    """
    keep = _check_type3(c)
    edges = {(v, w, col) for v, col, w, _ in _walks(c, keep)}
    members = c.members
    return ColoredDigraph.build(keep, edges, {v: members[v] for v in keep})


def extract_insertions(c: ColoredDigraph) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    """Spliced-out sequences keyed by (source vertex, colour) of the reduced edge.

    Entries are ``(label, j)`` with the label in B_j.  Feeding the result to
    :func:`expand_type3` with :func:`reduce_type3`'s output rebuilds ``c``.
    """
    keep = _check_type3(c)
    return {(v, col): tuple(path) for v, col, _, path in _walks(c, keep) if path}


def expand_type3(
    d: ColoredDigraph, insertions: Mapping[tuple[int, int], Sequence[tuple[int, int]]]
) -> ColoredDigraph:
    """Replace edges of a reduced digraph by paths through fresh vertices.

    ``insertions[(u, i)]`` is a sequence of ``(label, j)``: the colour-i edge
    leaving ``u`` becomes ``u -> w_1 -> ... -> w_m -> v`` and each ``w``
    joins sigma_i and B_j.
    """
    members = d.members
    for v, roles in members.items():
        if sum(role == "A" for _, role in roles) != 2:
            raise NotType3Error(f"vertex {v} of the input is not in two permutations")
    succ = d.successor()
    fresh: set[int] = set()
    for (u, col), seq in insertions.items():
        if (u, col) not in succ:
            raise KeyError(f"no colour-{col} edge leaves vertex {u}")
        for w, j in seq:
            if w in d.vertices or w in fresh:
                raise LabelCollisionError(f"label {w} is not fresh")
            if j == col:
                raise ValueError(f"inserted vertex {w} cannot sit in B_{col} of its own colour")
            fresh.add(w)
    edges = set()
    new_members = dict(members)
    for (u, col), v in succ.items():
        seq = insertions.get((u, col), ())
        prev = u
        for w, j in seq:
            edges.add((prev, w, col))
            new_members[w] = tuple(sorted([(col, "A"), (j, "B")]))
            prev = w
        edges.add((prev, v, col))
    return ColoredDigraph.build(d.vertices | fresh, edges, new_members)


def dump_digraph(g: ColoredDigraph) -> str:
    """Text dump: ``src dst colour`` per edge, then ``v i:R j:R`` per vertex."""
    lines = [f"{s} {t} {c}" for s, t, c in sorted(g.edges)]
    lines += [f"{v} " + " ".join(f"{col}:{role}" for col, role in roles) for v, roles in g.membership]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_digraph(text: str) -> ColoredDigraph:
    edges = set()
    membership = {}
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if any(":" in tok for tok in tokens[1:]):
            membership[int(tokens[0])] = [
                (int(col), role) for col, role in (tok.split(":") for tok in tokens[1:])
            ]
        else:
            s, t, c = map(int, tokens)
            edges.add((s, t, c))
    return ColoredDigraph.build(membership, edges, membership)
