"""Constructors for the named hypergraph families.

All constructors label vertices deterministically in ascending order so
that repeated calls are byte-for-byte identical.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadDimensions, BadOverlap, NotATree
from .hypergraph import Hypergraph, validate


def hyperstar(n: int, k: int) -> Hypergraph:
    """All edges through center vertex 1; leaves partitioned in ascending
    (k-1)-blocks."""
    if k < 2 or n < k or (n - 1) % (k - 1) != 0:
        raise BadDimensions(f"no hyperstar with n={n}, k={k}")
    m = (n - 1) // (k - 1)
    edges = []
    v = 2
    for _ in range(m):
        edges.append([1] + list(range(v, v + k - 1)))
        v += k - 1
    return validate(edges, n, k=k)


def loose_path(n: int, k: int) -> Hypergraph:
    """Consecutive edges share exactly one vertex; all interior shared
    vertices have degree two."""
    if k < 2 or n < k or (n - 1) % (k - 1) != 0:
        raise BadDimensions(f"no loose path with n={n}, k={k}")
    m = (n - 1) // (k - 1)
    edges = []
    for i in range(m):
        start = i * (k - 1) + 1
        edges.append(list(range(start, start + k)))
    return validate(edges, n, k=k)


def loose_path_reflection_orbits(n: int, k: int) -> list[set[int]]:
    """Vertex orbits of loose_path(n, k) under the end-to-end reflection
    v -> n+1-v (an automorphism of the construction)."""
    orbits = []
    for v in range(1, n // 2 + 1):
        orbits.append({v, n + 1 - v})
    if n % 2 == 1:
        orbits.append({(n + 1) // 2})
    return orbits


def hyperstar_orbits(n: int, k: int) -> list[set[int]]:
    """Center vs. the rest: the two automorphism orbits of the hyperstar."""
    return [{1}, set(range(2, n + 1))]


def double_star(a: int, b: int, k: int) -> Hypergraph:
    """k-th power of the ordinary double star S(a, b): a bridge edge whose
    end vertices carry a and b pendent edges."""
    if a < 0 or b < 0 or k < 2:
        raise BadDimensions(f"double_star needs a, b >= 0 and k >= 2, got ({a}, {b}, {k})")
    tree_edges = [(1, 2)]
    nxt = 3
    for _ in range(a):
        tree_edges.append((1, nxt))
        nxt += 1
    for _ in range(b):
        tree_edges.append((2, nxt))
        nxt += 1
    return _power_of_tree_edges(tree_edges, nxt - 1, k)


def tree_power(parents: Sequence[int], k: int) -> Hypergraph:
    """k-th power of an ordinary tree given as a parent array.

    ``parents[i]`` is the parent of node i+2 (the array covers nodes
    2..n', the tree being rooted at node 1).  Each ordinary edge becomes a
    k-edge padded with k-2 fresh degree-one vertices.
    """
    n_prime = len(parents) + 1
    if n_prime < 2:
        raise NotATree("tree must have at least 2 nodes")
    tree_edges = []
    for i, p in enumerate(parents):
        child = i + 2
        if not (1 <= p <= n_prime) or p == child:
            raise NotATree(f"bad parent {p} for node {child}")
        tree_edges.append((p, child))
    # parent arrays of this shape are cycle-free iff every node reaches
    # the root; check reachability
    if not _parents_form_tree(parents):
        raise NotATree("parent array contains a cycle or unreachable node")
    return _power_of_tree_edges(tree_edges, n_prime, k)


def _parents_form_tree(parents: Sequence[int]) -> bool:
    n_prime = len(parents) + 1
    for node in range(2, n_prime + 1):
        seen = set()
        cur = node
        while cur != 1:
            if cur in seen or not (2 <= cur <= n_prime):
                return False
            seen.add(cur)
            cur = parents[cur - 2]
    return True


def _power_of_tree_edges(tree_edges: list[tuple[int, int]], n_prime: int, k: int) -> Hypergraph:
    n = n_prime + len(tree_edges) * (k - 2)
    nxt = n_prime + 1
    edges = []
    for u, v in tree_edges:
        pad = list(range(nxt, nxt + k - 2))
        nxt += k - 2
        edges.append([u, v] + pad)
    return validate(edges, n, k=k)


def s_path(m: int, s: int, k: int) -> Hypergraph:
    """k-uniform path whose consecutive edges overlap in exactly s vertices."""
    if not (1 <= s <= k // 2):
        raise BadOverlap(f"need 1 <= s <= k/2, got s={s}, k={k}")
    if m < 1:
        raise BadOverlap(f"s_path needs m >= 1, got {m}")
    n = k + (m - 1) * (k - s)
    edges = []
    for i in range(m):
        start = i * (k - s) + 1
        edges.append(list(range(start, start + k)))
    return validate(edges, n, k=k)


def s_cycle(m: int, s: int, k: int) -> Hypergraph:
    """k-uniform cycle whose consecutive edges (cyclically) overlap in
    exactly s vertices."""
    if not (1 <= s <= k // 2):
        raise BadOverlap(f"need 1 <= s <= k/2, got s={s}, k={k}")
    if m < 3:
        raise BadOverlap(f"s_cycle needs m >= 3, got {m}")
    n = m * (k - s)
    edges = []
    for i in range(m):
        start = i * (k - s)
        edges.append([(start + t) % n + 1 for t in range(k)])
    return validate(edges, n, k=k)


def single_edge(k: int) -> Hypergraph:
    return validate([list(range(1, k + 1))], k, k=k)
