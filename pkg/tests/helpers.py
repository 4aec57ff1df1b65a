"""Shared helpers for parametrized tests."""

import math


def coprime_pairs(max_t: int, min_k: int = 1, min_t: int = 2) -> list[tuple[int, int]]:
    """All (k, t) with min_k <= k < t, min_t <= t <= max_t and gcd(k, t) = 1."""
    return [
        (k, t)
        for t in range(min_t, max_t + 1)
        for k in range(min_k, t)
        if math.gcd(k, t) == 1
    ]
