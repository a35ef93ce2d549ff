"""Edge-based application of the three spectral tensors, Rayleigh forms,
and a dense materialized oracle for small instances.

All three operators act on a k-uniform hypergraph G:

* Adjacency: entry 1/(k-1)! on every permutation of every edge tuple.
* SignlessLaplacian: adjacency plus the diagonal degree tensor.
* IncidenceQ: entry at (i_1, ..., i_k) counts edges containing all of
  i_1, ..., i_k.

apply() iterates edges once (O(m*k) arithmetic), never materializing the
n^k tensor.  dense_build() materializes it, as a cross-check oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, TooLarge
from .hypergraph import Hypergraph

DEFAULT_DENSE_CAP = 10**7


class TensorKind(Enum):
    Adjacency = "adj"
    SignlessLaplacian = "q"
    IncidenceQ = "qstar"


@dataclass(frozen=True)
class DenseTensor:
    k: int
    n: int
    values: np.ndarray  # shape (n,) * k, symmetric, nonnegative

    def contract(self, x: np.ndarray) -> np.ndarray:
        """(T x^{k-1})_i by repeated contraction over the last axis."""
        y = self.values
        for _ in range(self.k - 1):
            y = y @ x
        return y


def _check_vector(g: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, expected ({g.n},)")
    return x


def apply(kind: TensorKind, g: Hypergraph, x) -> np.ndarray:
    """(T x^{k-1}) for the selected tensor, computed edge by edge."""
    x = _check_vector(g, x)
    k = g.k
    out = np.zeros(g.n)
    if kind is TensorKind.IncidenceQ:
        for e in g.edges:
            idx = [v - 1 for v in e]
            s = x[idx].sum() ** (k - 1)
            for i in idx:
                out[i] += s
        return out
    # adjacency part, shared by Adjacency and SignlessLaplacian:
    # out[i] += prod_{j in e, j != i} x_j, by direct multiplication
    for e in g.edges:
        idx = [v - 1 for v in e]
        vals = x[idx]
        for t in range(k):
            p = 1.0
            for u in range(k):
                if u != t:
                    p *= vals[u]
            out[idx[t]] += p
    if kind is TensorKind.SignlessLaplacian:
        out += np.array(g.degrees, dtype=float) * x ** (k - 1)
    return out


def rayleigh(kind: TensorKind, g: Hypergraph, x) -> float:
    """x^T (T x) via the closed edge sums."""
    x = _check_vector(g, x)
    k = g.k
    total = 0.0
    if kind is TensorKind.IncidenceQ:
        for e in g.edges:
            total += x[[v - 1 for v in e]].sum() ** k
        return total
    for e in g.edges:
        vals = x[[v - 1 for v in e]]
        total += k * vals.prod()
        if kind is TensorKind.SignlessLaplacian:
            total += (vals**k).sum()
    return total


def dense_build(kind: TensorKind, g: Hypergraph, cap: int = DEFAULT_DENSE_CAP) -> DenseTensor:
    """Fully materialized symmetric tensor; oracle for apply()."""
    n, k = g.n, g.k
    if n**k > cap:
        raise TooLarge(f"n^k = {n**k} exceeds cap {cap}")
    t = np.zeros((n,) * k)
    if kind is TensorKind.IncidenceQ:
        for e in g.edges:
            idx = [v - 1 for v in e]
            for tup in itertools.product(idx, repeat=k):
                t[tup] += 1.0
        return DenseTensor(k=k, n=n, values=t)
    w = 1.0 / math.factorial(k - 1)
    for e in g.edges:
        idx = [v - 1 for v in e]
        for tup in itertools.permutations(idx):
            t[tup] = w
    if kind is TensorKind.SignlessLaplacian:
        for i, d in enumerate(g.degrees):
            t[(i,) * k] += float(d)
    return DenseTensor(k=k, n=n, values=t)
