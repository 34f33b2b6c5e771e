"""The four Hilbert-function computation methods and their dispatcher.

* oracle: brute-force enumeration of monomials (ground truth, capped);
* lcm: inclusion-exclusion over the lcm lattice of the generators;
* syzygy: recursion on pairwise syzygy quotients, memoized;
* table: row-by-row short-exact-sequence build with annihilator terms.

All methods return identical values for identical inputs; the test suite
cross-checks them against each other on randomized ideals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal, Optional

from . import kernels
from .errors import ResourceCapError
from .monomial import (
    Monomial,
    MonomialIdeal,
    VariableOrder,
    lcm,
    minimalize,
    reindex_for_table,
    restrict,
    stage,
    syzygy_quotient,
)
from .pascal import hf_principal, hf_two_generators, pascal_F

MethodKind = Literal["oracle", "lcm", "syzygy", "table", "auto"]

ENUM_CAP_DEFAULT = 10**8
LATTICE_CAP_DEFAULT = 20


def hf_oracle(
    I: MonomialIdeal,
    b: int,
    enum_cap: int = ENUM_CAP_DEFAULT,
    backend: str = "auto",
) -> int:
    """Count degree-b monomials outside I by direct enumeration.

    Refuses (ResourceCapError) when the free ring has more than ``enum_cap``
    monomials of degree b.
    """
    if b < 0:
        return 0
    if pascal_F(I.arity, b) > enum_cap:
        raise ResourceCapError(
            f"enumeration of {pascal_F(I.arity, b)} monomials exceeds cap {enum_cap}"
        )
    gens = [g.exponents for g in I.generators]
    return kernels.count_outside(I.arity, b, gens, backend=backend)


@dataclass(frozen=True)
class LcmLattice:
    """All nonempty-subset lcms of an ideal's generators, grouped by subset size.

    ``layers[r - 1]`` holds the lcm of every r-subset, so layer r has
    C(n, r) entries and contributes with sign (-1)^(r-1) to HF(I, b).
    """

    arity: int
    layers: tuple[tuple[Monomial, ...], ...]


def build_lcm_lattice(I: MonomialIdeal, lattice_cap: int = LATTICE_CAP_DEFAULT) -> LcmLattice:
    n = len(I.generators)
    if n < 1:
        raise ValueError("lcm lattice needs at least one generator")
    if n > lattice_cap:
        raise ResourceCapError(f"{n} generators exceed lattice cap {lattice_cap}")
    # subset lcms by dynamic programming over bitmasks: each mask extends the
    # mask with its lowest generator removed
    by_mask: list[Monomial | None] = [None] * (1 << n)
    layers: list[list[Monomial]] = [[] for _ in range(n)]
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        m = I.generators[low] if rest == 0 else lcm(by_mask[rest], I.generators[low])
        by_mask[mask] = m
        layers[mask.bit_count() - 1].append(m)
    return LcmLattice(I.arity, tuple(tuple(layer) for layer in layers))


def adjacent_cancellations(
    lattice: LcmLattice,
) -> tuple[list[Counter], list[tuple[int, int]]]:
    """Remove equal-degree pairs from adjacent layers.

    Such a pair carries opposite signs, so its net contribution to the
    alternating sum is zero.  Returns the surviving degree multisets per
    layer and the removed pairs as (lower layer index, degree).
    """
    counts = [Counter(m.degree for m in layer) for layer in lattice.layers]
    pairs: list[tuple[int, int]] = []
    for r in range(len(counts) - 1):
        for d in sorted(set(counts[r]) & set(counts[r + 1])):
            k = min(counts[r][d], counts[r + 1][d])
            if k > 0:
                counts[r][d] -= k
                counts[r + 1][d] -= k
                pairs.extend([(r + 1, d)] * k)
    return counts, pairs


def hf_lcm_lattice(
    I: MonomialIdeal,
    b_max: int,
    cancel: bool = False,
    lattice_cap: int = LATTICE_CAP_DEFAULT,
) -> list[int]:
    """HF(R/I, b) for b = 0..b_max by inclusion-exclusion over the lattice."""
    a = I.arity
    if I.is_zero:
        return [pascal_F(a, b) for b in range(b_max + 1)]
    lattice = build_lcm_lattice(I, lattice_cap)
    if cancel:
        counts, _ = adjacent_cancellations(lattice)
    else:
        counts = [Counter(m.degree for m in layer) for layer in lattice.layers]
    values = []
    for b in range(b_max + 1):
        ideal_count = 0
        for r, layer_counts in enumerate(counts, start=1):
            sign = 1 if r % 2 == 1 else -1
            ideal_count += sign * sum(
                mult * pascal_F(a, b - d) for d, mult in layer_counts.items()
            )
        values.append(pascal_F(a, b) - ideal_count)
    return values


def hf_syzygy(
    I: MonomialIdeal,
    b_max: int,
    stats: Optional[dict] = None,
) -> list[int]:
    """HF(R/I, b) for b = 0..b_max by the syzygy recursion.

    Each recursion step peels off the generators one by one; the j-th
    generator contributes the quotient by its syzygies against all earlier
    generators, shifted by its degree.  Sub-problems repeat heavily, so
    values are memoized on (canonical sub-ideal, degree).  ``stats``, when
    given, receives hit/miss counts and the peak memo size.
    """
    a = I.arity
    memo: dict[tuple, int] = {}
    hits = misses = 0

    def canon(J: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(g.exponents for g in minimalize(J).generators))

    def value(gens: tuple[tuple[int, ...], ...], b: int) -> int:
        nonlocal hits, misses
        if b < 0:
            return 0
        if not gens:
            return pascal_F(a, b)
        key = (gens, b)
        if key in memo:
            hits += 1
            return memo[key]
        misses += 1
        if sum(gens[0]) == 0:
            # canonical form of the unit ideal is the single constant generator
            result = 0
        else:
            result = pascal_F(a, b) - pascal_F(a, b - sum(gens[0]))
            ms = [Monomial(g) for g in gens]
            for j in range(1, len(ms)):
                sub = MonomialIdeal(a, tuple(syzygy_quotient(ms[i], ms[j]) for i in range(j)))
                result -= value(canon(sub), b - ms[j].degree)
        memo[key] = result
        return result

    start = canon(I)
    values = [value(start, b) for b in range(b_max + 1)]
    if stats is not None:
        stats.update({"hits": hits, "misses": misses, "memo_size": len(memo)})
    return values


@dataclass(frozen=True)
class AnnihilatorDecomposition:
    """HF decomposition of the stage-a annihilator (0 : x_a).

    The annihilator's HF at degree b is

        delta * F(free_arity, b - delta_shift)
        + sum over terms of HF(sub_ideal quotient, b - shift)

    where each sub-ideal lives in the first ``free_arity`` = a - 1 table
    variables and carries no occurrence of the stage variable.
    """

    free_arity: int
    delta: int
    delta_shift: int
    terms: tuple[tuple[MonomialIdeal, int], ...]


def annihilator_decomposition(
    I: MonomialIdeal, order: VariableOrder, a: int
) -> AnnihilatorDecomposition:
    """Decompose the annihilator of multiplication by the stage-a variable.

    ``I`` must already satisfy the re-indexing criteria for ``order``
    (see :func:`reindex_for_table`); otherwise a syzygy may involve the
    stage variable and a ValueError is raised.
    """
    if not 1 <= a <= order.arity:
        raise ValueError(f"stage {a} out of range 1..{order.arity}")
    x_a = order.perm[a - 1]
    gens = I.generators
    free_arity = a - 1
    project_arity = max(free_arity, 1)

    delta = 0
    delta_shift = 0
    terms: list[tuple[MonomialIdeal, int]] = []
    for j, p_j in enumerate(gens, start=1):
        if stage(p_j, order) != a:
            continue
        shift = p_j.degree - 1  # deg(p_j / x_a)
        if j == 1:
            delta = 1
            delta_shift = shift
            continue
        sub_gens = []
        for i in range(j - 1):
            m = syzygy_quotient(gens[i], p_j)
            if m.exponents[x_a] != 0:
                raise ValueError(
                    "re-indexing precondition violated: syzygy "
                    f"{m.exponents} involves the stage-{a} variable"
                )
            sub_gens.append(
                Monomial(tuple(m.exponents[order.perm[i2]] for i2 in range(project_arity)))
            )
        sub = minimalize(MonomialIdeal(project_arity, tuple(sub_gens)))
        terms.append((sub, shift))
    return AnnihilatorDecomposition(free_arity, delta, delta_shift, tuple(terms))


def annihilator_hf(dec: AnnihilatorDecomposition, b_max: int) -> list[int]:
    """Evaluate a decomposition for b = 0..b_max via the auto dispatcher."""
    values = [0] * (b_max + 1)
    if dec.delta:
        for b in range(b_max + 1):
            if dec.free_arity >= 1:
                values[b] += pascal_F(dec.free_arity, b - dec.delta_shift)
            elif b == dec.delta_shift:
                values[b] += 1  # HF of the base field, shifted
    for sub, shift in dec.terms:
        if shift > b_max:
            continue
        sub_values = hf(sub, b_max - shift, method="auto")
        for b in range(shift, b_max + 1):
            values[b] += sub_values[b - shift]
    return values


@dataclass(frozen=True)
class HilbertTable:
    """Rows a = 1..a_max of HF values for the chain of stage quotients.

    ``rows[a - 1][b]`` is HF(k[first a variables]/I_a, b).  ``ideals`` holds
    each row's stage ideal and ``annihilator_hfs`` the annihilator HF
    sequence consumed while producing the row (zeros for row 1 and for
    stages that introduce no generator).
    """

    rows: tuple[tuple[int, ...], ...]
    ideals: tuple[MonomialIdeal, ...]
    annihilator_hfs: tuple[tuple[int, ...], ...]


def hf_table(
    I: MonomialIdeal,
    order: Optional[VariableOrder] = None,
    a_max: Optional[int] = None,
    b_max: int = 10,
) -> HilbertTable:
    """Build the Hilbert function table row by row.

    Row 1 is computed directly; each later row a uses the short exact
    sequence for multiplication by the stage variable:

        HF(M_a, b) = HF(M_{a-1}, b) + HF(M_a, b-1) - HF((0 : x_a), b-1).

    Rows beyond the ring arity add free variables, so their annihilator
    vanishes and the recurrence reduces to the Pascal-table rule.
    """
    if order is None:
        order = VariableOrder.identity(I.arity)
    if a_max is None:
        a_max = I.arity
    if a_max < 1 or b_max < 0:
        raise ValueError("need a_max >= 1 and b_max >= 0")

    J = reindex_for_table(I, order)
    zeros = (0,) * (b_max + 1)

    rows: list[tuple[int, ...]] = []
    ideals: list[MonomialIdeal] = []
    ann_hfs: list[tuple[int, ...]] = []
    for a in range(1, a_max + 1):
        if a <= I.arity:
            I_a = restrict(J, order, a)
        else:
            # extra free variable: same generators, padded arity
            base = restrict(J, order, I.arity)
            I_a = MonomialIdeal(
                a,
                tuple(
                    Monomial(g.exponents + (0,) * (a - I.arity))
                    for g in base.generators
                ),
            )
        ideals.append(I_a)
        if a == 1:
            rows.append(tuple(hf(I_a, b_max, method="auto")))
            ann_hfs.append(zeros)
            continue
        if a <= I.arity:
            dec = annihilator_decomposition(J, order, a)
            ann = annihilator_hf(dec, b_max)
        else:
            ann = list(zeros)
        ann_hfs.append(tuple(ann))
        if I_a.is_unit:
            rows.append(zeros)
            continue
        prev = rows[-1]
        row = [prev[0]]
        for b in range(1, b_max + 1):
            row.append(prev[b] + row[b - 1] - ann[b - 1])
        rows.append(tuple(row))
    return HilbertTable(tuple(rows), tuple(ideals), tuple(ann_hfs))


def hf(
    I: MonomialIdeal,
    b_max: int,
    method: MethodKind = "auto",
    enum_cap: int = ENUM_CAP_DEFAULT,
    lattice_cap: int = LATTICE_CAP_DEFAULT,
) -> list[int]:
    """HF(R/I, b) for b = 0..b_max by the requested method.

    ``auto`` picks closed forms for up to two generators, the lcm lattice
    while the generator count is within the cap, and the syzygy recursion
    beyond it.
    """
    if b_max < 0:
        raise ValueError("b_max must be >= 0")
    if method in ("lcm", "lcm-lattice"):
        return hf_lcm_lattice(I, b_max, lattice_cap=lattice_cap)
    if method == "syzygy":
        return hf_syzygy(I, b_max)
    if method == "oracle":
        return [hf_oracle(I, b, enum_cap=enum_cap) for b in range(b_max + 1)]
    if method == "table":
        return list(hf_table(I, a_max=I.arity, b_max=b_max).rows[-1])
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    J = minimalize(I)
    a = J.arity
    if J.is_unit:
        return [0] * (b_max + 1)
    n = len(J.generators)
    if n == 0:
        return [pascal_F(a, b) for b in range(b_max + 1)]
    if n == 1:
        d = J.generators[0].degree
        return [hf_principal(a, d, b) for b in range(b_max + 1)]
    if n == 2:
        u, v = J.generators
        d_lcm = lcm(u, v).degree
        return [
            hf_two_generators(a, u.degree, v.degree, d_lcm, b)
            for b in range(b_max + 1)
        ]
    if n <= lattice_cap:
        return hf_lcm_lattice(J, b_max, lattice_cap=lattice_cap)
    return hf_syzygy(J, b_max)
