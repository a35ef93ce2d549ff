"""Shared corpus of connected test instances."""

import numpy as np
import pytest

from hypertree_spectra import (
    double_star,
    hyperstar,
    loose_path,
    s_cycle,
    s_path,
    single_edge,
    tree_power,
)

# name -> hypergraph; every instance is connected
CORPUS = {
    "single_edge_3": single_edge(3),
    "single_edge_4": single_edge(4),
    "hyperstar_7_3": hyperstar(7, 3),
    "hyperstar_9_3": hyperstar(9, 3),
    "hyperstar_13_4": hyperstar(13, 4),
    "loose_path_7_3": loose_path(7, 3),
    "loose_path_9_3": loose_path(9, 3),
    "loose_path_13_4": loose_path(13, 4),
    "double_star_1_1_3": double_star(1, 1, 3),
    "double_star_1_2_3": double_star(1, 2, 3),
    "spider_3x2_k3": tree_power([1, 1, 1, 2, 3, 4], 3),
    "s_path_3_2_4": s_path(3, 2, 4),
    "s_cycle_3_2_4": s_cycle(3, 2, 4),
    "s_cycle_4_1_3": s_cycle(4, 1, 3),
}

SMALL = {name: g for name, g in CORPUS.items() if g.n <= 8}


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_instance(request):
    return CORPUS[request.param]


@pytest.fixture(params=sorted(SMALL), ids=sorted(SMALL))
def small_instance(request):
    return SMALL[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
