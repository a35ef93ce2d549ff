"""Structural perturbations: edge moving, edge releasing, total grafting,
and the graft-sequence reduction of an ordinary tree to a path.

All transforms are pure: they return new hypergraphs and never mutate
their inputs.  Edge ids are 0-based indices into ``g.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidSpec,
    MultipleEdge,
    NotATree,
    NotLinear,
    NotPendentPaths,
    PendentEdge,
)
from .hypergraph import Hypergraph, is_linear, pendent_edges, validate
from .spectral import spectral_radius
from .tensors import TensorKind


@dataclass(frozen=True)
class EdgeMoveSpec:
    """Move edges e_1..e_r from source vertices v_1..v_r to target u.

    Sources may repeat; the target must lie outside every moved edge.
    """

    edge_ids: tuple[int, ...]
    sources: tuple[int, ...]
    target: int


@dataclass(frozen=True)
class PendentPath:
    """A pendent path starting at its anchor vertex: the chain of link
    vertices (anchor first, free end last) and the 0-based edge ids."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def end(self) -> int:
        return self.vertices[-1]


def move_edges(g: Hypergraph, spec: EdgeMoveSpec) -> Hypergraph:
    """E' = (E minus moved edges) plus the moved edges with each source
    vertex replaced by the target."""
    if len(spec.edge_ids) != len(spec.sources) or not spec.edge_ids:
        raise InvalidSpec("need r >= 1 edges with one source vertex each")
    if len(set(spec.edge_ids)) != len(spec.edge_ids):
        raise InvalidSpec("edge ids must be distinct")
    u = spec.target
    new_edges: list[tuple[int, ...]] = []
    moved = set(spec.edge_ids)
    for eid, v in zip(spec.edge_ids, spec.sources):
        if not (0 <= eid < g.m):
            raise InvalidSpec(f"edge id {eid} out of range")
        e = g.edges[eid]
        if v not in e:
            raise InvalidSpec(f"source vertex {v} not in edge {list(e)}")
        if u in e:
            raise InvalidSpec(f"target vertex {u} already in edge {list(e)}")
        new_edges.append(tuple(sorted(set(e) - {v} | {u})))
    kept = [e for j, e in enumerate(g.edges) if j not in moved]
    combined = kept + new_edges
    if len(set(combined)) != len(combined):
        raise MultipleEdge("edge move would create a multiple edge")
    return validate(combined, g.n, k=g.k)


def edge_release(g: Hypergraph, edge_id: int, u: int) -> Hypergraph:
    """Move every edge adjacent to the given non-pendent edge but not
    containing u from its (unique) common vertex to u."""
    if not is_linear(g):
        raise NotLinear("edge_release requires a linear hypergraph")
    if not (0 <= edge_id < g.m):
        raise InvalidSpec(f"edge id {edge_id} out of range")
    e = g.edges[edge_id]
    if u not in e:
        raise InvalidSpec(f"vertex {u} not in edge {list(e)}")
    if edge_id in pendent_edges(g):
        raise PendentEdge("cannot release a pendent edge")
    ids: list[int] = []
    sources: list[int] = []
    for j, other in enumerate(g.edges):
        if j == edge_id or u in other:
            continue
        common = set(e).intersection(other)
        if common:
            (v,) = common  # unique by linearity
            ids.append(j)
            sources.append(v)
    return move_edges(g, EdgeMoveSpec(tuple(ids), tuple(sources), u))


def edge_release_best(
    g: Hypergraph,
    edge_id: int,
    kind: TensorKind = TensorKind.IncidenceQ,
    tol: float = 1e-10,
) -> Hypergraph:
    """Release at the vertex of the edge with the largest Perron
    component, which guarantees the radius strictly increases."""
    result = spectral_radius(kind, g, tol=tol)
    e = g.edges[edge_id] if 0 <= edge_id < g.m else ()
    if not e:
        raise InvalidSpec(f"edge id {edge_id} out of range")
    u = max(e, key=lambda v: result.eigvec[v - 1])
    return edge_release(g, edge_id, u)


def find_pendent_paths(g: Hypergraph, v: int) -> list[PendentPath]:
    """Maximal pendent paths starting at v, longest first.

    A pendent path edge carries k-2 degree-one filler vertices; interior
    link vertices have degree two and the far end degree one.
    """
    if not is_linear(g):
        raise NotLinear("pendent paths are defined on linear hypergraphs")
    degs = g.degrees
    paths: list[PendentPath] = []
    for start_eid in g.incident_edges(v):
        chain_vertices = [v]
        chain_edges = []
        cur_v, cur_e = v, start_eid
        ok = True
        visited_edges = set()
        while True:
            if cur_e in visited_edges:  # walked around a 1-cycle
                ok = False
                break
            visited_edges.add(cur_e)
            others = [w for w in g.edges[cur_e] if w != cur_v]
            continuing = [w for w in others if degs[w - 1] == 2]
            if any(degs[w - 1] > 2 for w in others) or len(continuing) > 1:
                ok = False
                break
            chain_edges.append(cur_e)
            if not continuing:
                # all remaining vertices degree one; pick the smallest as
                # the designated free end (any choice is automorphic)
                chain_vertices.append(min(others))
                break
            w = continuing[0]
            chain_vertices.append(w)
            nxt = [j for j in g.incident_edges(w) if j != cur_e]
            cur_v, cur_e = w, nxt[0]
        if ok:
            paths.append(PendentPath(tuple(chain_vertices), tuple(chain_edges)))
    paths.sort(key=lambda p: (-p.length, p.edge_ids))
    return paths


def total_graft(g: Hypergraph, v: int, p: int, q: int) -> Hypergraph:
    """Concatenate two pendent paths of lengths p and q at v into a single
    pendent path of length p+q (the strict-decrease direction requires
    both p and q nonzero, so zero lengths are rejected)."""
    if p < 1 or q < 1:
        raise NotPendentPaths(f"need p, q >= 1, got p={p}, q={q}")
    paths = find_pendent_paths(g, v)
    path_p = next((pp for pp in paths if pp.length == p), None)
    path_q = next(
        (pp for pp in paths if pp.length == q and pp is not path_p), None
    )
    if path_p is None or path_q is None:
        raise NotPendentPaths(
            f"no two disjoint pendent paths of lengths {p} and {q} at vertex {v}"
        )
    if g.degree(v) < 3:
        # both incident edges are the two paths: the base hypergraph is a
        # bare vertex and the graft is an isomorphism, not a perturbation
        raise NotPendentPaths(
            f"vertex {v} carries no edge besides the two pendent paths"
        )
    # re-hang the q-path off the free end of the p-path: move its first
    # edge from v to end(P)
    spec = EdgeMoveSpec((path_q.edge_ids[0],), (v,), path_p.end)
    return move_edges(g, spec)


# -- ordinary trees: graft sequence reduction to a path ----------------------

@dataclass(frozen=True)
class GraftStep:
    vertex: int
    p: int
    q: int


def _tree_adj(edges: Sequence[tuple[int, int]], n_prime: int) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {u: set() for u in range(1, n_prime + 1)}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    return adj


def parents_to_edges(parents: Sequence[int]) -> list[tuple[int, int]]:
    return [(p, i + 2) for i, p in enumerate(parents)]


def edges_to_parents(edges: Sequence[tuple[int, int]], n_prime: int) -> list[int]:
    """Root the tree at node 1 and emit the parent of each node 2..n'."""
    adj = _tree_adj(edges, n_prime)
    parent = {1: 0}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    if len(parent) != n_prime:
        raise NotATree("edge list is not a connected tree")
    return [parent[i] for i in range(2, n_prime + 1)]


def _tree_pendent_paths(adj: dict[int, set[int]], v: int) -> list[list[int]]:
    """Pendent paths (as vertex chains, v first) hanging off v."""
    out = []
    for start in adj[v]:
        chain = [v, start]
        prev, cur = v, start
        ok = True
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            chain.append(nxt)
            prev, cur = cur, nxt
        if len(adj[cur]) > 2:
            ok = False
        if ok:
            out.append(chain)
    out.sort(key=lambda c: (len(c), c))
    return out


def tree_graft(
    edges: Sequence[tuple[int, int]], n_prime: int, v: int, p: int, q: int
) -> list[tuple[int, int]]:
    """Apply one total graft at v on an ordinary tree edge list."""
    if p < 1 or q < 1:
        raise NotPendentPaths(f"need p, q >= 1, got p={p}, q={q}")
    adj = _tree_adj(edges, n_prime)
    paths = _tree_pendent_paths(adj, v)
    chain_p = next((c for c in paths if len(c) - 1 == p), None)
    chain_q = next(
        (c for c in paths if len(c) - 1 == q and c is not chain_p), None
    )
    if chain_p is None or chain_q is None:
        raise NotPendentPaths(
            f"no two pendent paths of lengths {p} and {q} at node {v}"
        )
    end_p = chain_p[-1]
    first_q = chain_q[1]
    new_edges = [e for e in edges if set(e) != {v, first_q}]
    new_edges.append((end_p, first_q))
    return new_edges


def graft_to_path(parents: Sequence[int]) -> list[GraftStep]:
    """Sequence of total grafts turning the tree into a path.

    Strategy: repeatedly pick a vertex of degree >= 3 furthest from node 1
    and merge its pendent paths pairwise (d(u) - 2 grafts per such vertex).
    """
    edges = parents_to_edges(parents)
    n_prime = len(parents) + 1
    edges_to_parents(edges, n_prime)  # validates tree shape
    steps: list[GraftStep] = []
    while True:
        adj = _tree_adj(edges, n_prime)
        heavy = [u for u in adj if len(adj[u]) >= 3]
        if not heavy:
            return steps
        dist = {1: 0}
        frontier = [1]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        u = max(heavy, key=lambda x: (dist[x], -x))
        while len(_tree_adj(edges, n_prime)[u]) > 2:
            chains = _tree_pendent_paths(_tree_adj(edges, n_prime), u)
            if len(chains) < 2:
                raise NotATree("internal error: expected pendent paths at grafting vertex")
            p = len(chains[0]) - 1
            q = len(chains[1]) - 1
            edges = tree_graft(edges, n_prime, u, p, q)
            steps.append(GraftStep(vertex=u, p=p, q=q))


def apply_graft_sequence(
    parents: Sequence[int], steps: Sequence[GraftStep]
) -> list[list[int]]:
    """Intermediate trees (as parent arrays) after each graft step."""
    edges = parents_to_edges(parents)
    n_prime = len(parents) + 1
    out = []
    for step in steps:
        edges = tree_graft(edges, n_prime, step.vertex, step.p, step.q)
        out.append(edges_to_parents(edges, n_prime))
    return out
