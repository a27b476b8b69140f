import os
from pathlib import Path

import numpy as np
import pytest

from fofsem.graph import Graph, from_edges


def build(n: int, edge_pairs) -> Graph:
    edges = np.array(list(edge_pairs), dtype=np.int64).reshape(-1, 2)
    return from_edges(n, edges)


@pytest.fixture
def triangle() -> Graph:
    return build(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path3() -> Graph:
    # v - a - b as 0 - 1 - 2
    return build(3, [(0, 1), (1, 2)])


@pytest.fixture
def star5() -> Graph:
    return build(6, [(0, i) for i in range(1, 6)])


def random_graph(rng: np.random.Generator, n: int, p: float = 0.4) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(len(iu)) < p
    return build(n, np.column_stack([iu[mask], ju[mask]]))


def snap_data_dir() -> Path | None:
    """Directory holding SNAP dataset files, if one is available."""
    candidates = [os.environ.get("FOFSEM_DATA_DIR"), "data"]
    for cand in candidates:
        if cand and Path(cand).is_dir():
            return Path(cand)
    return None
