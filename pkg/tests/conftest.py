import random

import pytest

from zagreb.oracle import tree_from_prufer
from zagreb.trees import Tree


@pytest.fixture
def rng():
    return random.Random(0x5A67EB)


def random_tree(rng, n):
    """Uniform random labelled tree on n vertices via a Prüfer sequence."""
    if n == 1:
        return Tree.from_edges(1, [])
    if n == 2:
        return Tree.from_edges(2, [(0, 1)])
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])
