"""Shared fixtures: enumerations of small field contexts for exhaustive checks."""

import pytest

from pnsieve.ffield import build_context
from pnsieve.intarith import is_prime, smallprimes


def enumerate_contexts(cap: int, min_n: int = 2):
    """All (p, k, n) with (p^k)^n <= cap and n >= min_n, including towers."""
    out = []
    for p in smallprimes(int(cap ** 0.5) + 1):
        k = 1
        while (p ** k) ** min_n <= cap:
            q = p ** k
            n = min_n
            while q ** n <= cap:
                out.append((p, k, n))
                n += 1
            k += 1
    return out


@pytest.fixture(scope="session")
def contexts_5000():
    return [build_context(p, k, n) for p, k, n in enumerate_contexts(5000)]


@pytest.fixture(scope="session")
def contexts_2000():
    return [build_context(p, k, n) for p, k, n in enumerate_contexts(2000)]


@pytest.fixture(scope="session")
def oracle_timer():
    """Accumulates elapsed seconds of the oracle/property suite."""
    return {}
