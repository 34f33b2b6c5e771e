"""Pure-Python enumeration kernel for the brute-force Hilbert function oracle.

Walks every exponent vector of the requested degree and counts those not
divisible by any generator.  The compiled kernel in ``_oracle_cy`` implements
the same contract; ``hilbertfn.kernels`` picks whichever is available.
"""

from __future__ import annotations

from typing import Sequence


def count_outside(arity: int, degree: int, gens: Sequence[Sequence[int]]) -> int:
    """Number of degree-``degree`` monomials in ``arity`` variables that lie
    outside the ideal generated by ``gens`` (exponent vectors)."""
    gen_list = [tuple(g) for g in gens]
    count = 0

    def walk(pos: int, rem: int, active: list[tuple[int, ...]]) -> None:
        nonlocal count
        if pos == arity - 1:
            if not any(g[pos] <= rem for g in active):
                count += 1
            return
        for e in range(rem + 1):
            still = [g for g in active if g[pos] <= e]
            if not still:
                # nothing can divide any completion; count compositions directly
                count += _compositions(rem - e, arity - pos - 1)
            else:
                walk(pos + 1, rem - e, still)

    if arity == 1:
        return 0 if any(g[0] <= degree for g in gen_list) else 1
    walk(0, degree, gen_list)
    return count


def _compositions(total: int, parts: int) -> int:
    """Number of ways to write ``total`` as an ordered sum of ``parts``
    non-negative integers (stars and bars)."""
    import math

    return math.comb(total + parts - 1, parts - 1)
