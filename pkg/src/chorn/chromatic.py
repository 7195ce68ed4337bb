"""Generalized (multi-coloured) chromatic polynomials.

``pi^m_G(q)`` counts maps sending each vertex ``i`` to an ``m_i``-subset of
``q`` colours so that adjacent vertices get disjoint subsets.  It is
computed three ways, which the test-suite plays against each other:

* ordered partitions into independent sets, ``sum_k |P_k| binom(q, k)``;
* the ordinary chromatic polynomial of the join graph over ``prod m_i!``;
* Lagrange interpolation of brute-force counts at ``q = 0..|m|``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Mapping

from .errors import GraphError, check_guard
from .graphs import Graph, join_graph
from .qpoly import QPolynomial, binomial_poly, falling_factorial, interpolate_q
from .series import ExponentVector, as_exponent


def _multiplicities(g: Graph, m) -> dict:
    m = as_exponent(m, g.vertices)
    mult = m.as_dict()
    unknown = set(mult).difference(g.vertices)
    if unknown:
        raise GraphError(f"support of m uses unknown vertices {sorted(unknown)!r}")
    return mult


def multicolor_count_bruteforce(g: Graph, m, q: int, *, guard: int | None = None) -> int:
    """Count proper multi-colourings by explicit enumeration of colour subsets."""
    mult = _multiplicities(g, m)
    if q < 0:
        raise ValueError(f"colour count must be non-negative, got {q}")
    verts = [v for v in g.vertices if mult.get(v)]
    check_guard("multicolour enumeration", prod(comb(q, mult[v]) for v in verts), guard)
    choices = [
        [sum(1 << c for c in cs) for cs in itertools.combinations(range(q), mult[v])]
        for v in verts
    ]
    earlier = [[j for j in range(i) if g.adjacent(verts[i], verts[j])] for i in range(len(verts))]
    masks = [0] * len(verts)

    def place(i: int) -> int:
        if i == len(verts):
            return 1
        total = 0
        for mask in choices[i]:
            if any(mask & masks[j] for j in earlier[i]):
                continue
            masks[i] = mask
            total += place(i + 1)
        return total

    return place(0)


class PartitionCounts:
    """``counts[k] = |P_k(m, G)|`` for ``k = 0..|m|``."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        self.counts = tuple(int(c) for c in counts)

    @property
    def max_k(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionCounts) and self.counts == other.counts

    def __repr__(self) -> str:
        return f"PartitionCounts({list(self.counts)})"


def ordered_partition_counts(g: Graph, m, *, guard: int | None = None) -> PartitionCounts:
    """Number of ordered tuples of nonempty independent sets whose multiset union is ``m``.

    A tuple is built block by block: the first block is any nonempty
    independent subset of the remaining support, and the rest is counted
    recursively (memoised on the remaining multiplicities).
    """
    mult = _multiplicities(g, m)
    verts = tuple(v for v in g.vertices if mult.get(v))
    total = sum(mult.values())
    # number of distinct remainders times number of candidate blocks
    check_guard("ordered partitions", prod(mult[v] + 1 for v in verts) * (1 << len(verts)), guard)
    index = {v: i for i, v in enumerate(verts)}
    blocks = []
    for s in g.independent_sets():
        if s and all(v in index for v in s):
            blocks.append(tuple(index[v] for v in s))

    @lru_cache(maxsize=None)
    def count(rem: tuple) -> tuple:
        # returns counts indexed by number of blocks
        if not any(rem):
            return (1,)
        acc: list[int] = []
        for b in blocks:
            if all(rem[i] for i in b):
                nxt = list(rem)
                for i in b:
                    nxt[i] -= 1
                sub = count(tuple(nxt))
                if len(acc) < len(sub) + 1:
                    acc.extend([0] * (len(sub) + 1 - len(acc)))
                for k, c in enumerate(sub):
                    acc[k + 1] += c
        return tuple(acc)

    raw = count(tuple(mult[v] for v in verts))
    out = list(raw) + [0] * (total + 1 - len(raw))
    return PartitionCounts(out[: total + 1])


def generalized_chromatic(g: Graph, m, *, guard: int | None = None) -> QPolynomial:
    """``sum_k |P_k(m, G)| binom(q, k)``."""
    counts = ordered_partition_counts(g, m, guard=guard)
    out = QPolynomial()
    for k, c in enumerate(counts.counts):
        if c:
            out = out + binomial_poly(k) * c
    return out


def _canonical(vertices: tuple, edges: frozenset) -> tuple:
    index = {v: i for i, v in enumerate(sorted(vertices))}
    return len(vertices), tuple(sorted((index[u], index[v]) if index[u] < index[v] else (index[v], index[u]) for u, v in edges))


@lru_cache(maxsize=200_000)
def _chromatic_canonical(n: int, edges: tuple) -> QPolynomial:
    if not edges:
        return QPolynomial.q() ** n
    if len(edges) == n * (n - 1) // 2:
        return falling_factorial(n)
    # delete / contract the last edge
    u, v = edges[-1]
    deleted = edges[:-1]
    # contract v into u: relabel v -> u, drop loops and duplicates
    merged = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    verts = tuple(x for x in range(n) if x != v)
    return _chromatic_canonical(n, deleted) - _chromatic_canonical(*_canonical(verts, frozenset(merged)))


def ordinary_chromatic(g: Graph, *, guard: int | None = None) -> QPolynomial:
    """Chromatic polynomial by memoised deletion-contraction."""
    if g.n > 12:
        # deletion-contraction visits at most 2^|E| leaves
        check_guard("deletion-contraction", 1 << len(g.edges), guard)
    return _chromatic_canonical(*_canonical(g.vertices, g.edges))


def generalized_chromatic_via_join(g: Graph, m, *, guard: int | None = None) -> QPolynomial:
    """Ordinary chromatic polynomial of the join graph ``G(m)`` divided by ``prod m_i!``."""
    mult = _multiplicities(g, m)
    joined = join_graph(g, mult)
    if joined.n > 12:
        check_guard("join graph", 1 << len(joined.edges), guard)
    return ordinary_chromatic(joined) / prod(factorial(k) for k in mult.values())


def generalized_chromatic_via_interpolation(g: Graph, m, *, guard: int | None = None) -> QPolynomial:
    """Interpolate brute-force counts at ``q = 0..|m|``."""
    mult = _multiplicities(g, m)
    d = sum(mult.values())
    samples = [(q, multicolor_count_bruteforce(g, mult, q, guard=guard)) for q in range(d + 1)]
    return interpolate_q(samples, d)
