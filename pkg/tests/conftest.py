import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240607)


def random_unimodular(rng, n, steps=8):
    """Product of random elementary column operations."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n == 1:
            U[0][0] = -U[0][0]
            continue
        f = rng.randint(-2, 2)
        for row in U:
            row[j] += f * row[i]
        if rng.random() < 0.3:
            for row in U:
                row[i], row[j] = row[j], row[i]
    return U
