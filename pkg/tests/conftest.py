from __future__ import annotations

import random
from typing import Iterator

import pytest

from hilbertfn.monomial import Monomial, MonomialIdeal


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` non-negative
    integers; the independent enumeration used by brute-force checks."""
    if parts == 1:
        yield (total,)
        return
    for e in range(total + 1):
        for rest in compositions(total - e, parts - 1):
            yield (e, *rest)


def random_ideal(
    rng: random.Random, arity: int, n_gens: int, max_exp: int = 6
) -> MonomialIdeal:
    gens = []
    while len(gens) < n_gens:
        exps = tuple(rng.randint(0, max_exp) for _ in range(arity))
        if sum(exps) == 0:
            continue
        gens.append(Monomial(exps))
    return MonomialIdeal(arity, tuple(gens))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
