"""Seeded random generators for elements, subsets and cone members.

Everything takes an explicit random.Random so suites are reproducible
across runs and platforms.
"""

from __future__ import annotations

import random
from typing import Optional

from .groups import (
    MatrixOrder,
    OrderedGroup,
    ProductOrder,
    SemigroupOrder,
    TrivialOrder,
    Subset,
    Vec,
    finite_subset,
)


def sample_vec(rng: random.Random, rank: int, box: int) -> Vec:
    return tuple(rng.randint(-box, box) for _ in range(rank))


def sample_subset(
    rng: random.Random, rank: int, box: int, max_size: int = 3
) -> Subset:
    size = rng.randint(1, max_size)
    return finite_subset(sample_vec(rng, rank, box) for _ in range(size))


def sample_positive(G: OrderedGroup, rng: random.Random, box: int) -> Vec:
    """Some element of the positive cone of G (0 is always valid)."""
    if isinstance(G, ProductOrder):
        return tuple(rng.randint(0, box) for _ in range(G.rank))
    if isinstance(G, SemigroupOrder):
        # random small combination of generators
        total = 0
        for g in G.gens:
            total += g * rng.randint(0, 2)
        return (total,)
    if isinstance(G, TrivialOrder):
        return (0,) * G.rank
    if isinstance(G, MatrixOrder):
        for _ in range(64):  # rejection sampling; cone may be thin
            v = sample_vec(rng, G.rank, box)
            if G.contains(v):
                return v
        return (0,) * G.rank
    # generic fallback for wrapped preorders
    for _ in range(64):
        v = sample_vec(rng, G.rank, box)
        if G.contains(v):
            return v
    return (0,) * G.rank
