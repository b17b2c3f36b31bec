"""Independent reference implementations used to cross-check the package.

Everything here is written directly from the defining formulas on plain
data (lists, sets, dicts), deliberately sharing no code with the package:
closures by fixpoint iteration, ideals by subset filtering, weights by
literal translation of the definitions.  Slow on purpose.
"""

from __future__ import annotations

import itertools
from math import comb


# -- posets ---------------------------------------------------------------------


def reachability(n: int, covers) -> set[tuple[int, int]]:
    """All pairs (a, b) with a <= b, by fixpoint iteration over the covers."""
    rel = {(a, a) for a in range(1, n + 1)}
    rel |= {(a, b) for a, b in covers}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return rel


def down_closure(labels, rel) -> frozenset[int]:
    targets = set(labels)
    return frozenset(a for (a, b) in rel if b in targets)


def maximal_of(subset, rel) -> frozenset[int]:
    subset = set(subset)
    return frozenset(
        a for a in subset
        if not any((a, b) in rel and a != b for b in subset)
    )


def all_ideals(n: int, rel) -> list[frozenset[int]]:
    """Every downward-closed subset, by filtering all 2^n subsets."""
    out = []
    for bits in range(1 << n):
        subset = {i + 1 for i in range(n) if bits >> i & 1}
        if all(a in subset for b in subset for a in range(1, n + 1) if (a, b) in rel):
            out.append(frozenset(subset))
    return out


# -- weights on vectors -----------------------------------------------------------


def split_blocks(vec, sizes):
    blocks = []
    pos = 0
    for k in sizes:
        blocks.append(tuple(vec[pos:pos + k]))
        pos += k
    return blocks


def support_labels(vec, sizes, m):
    return {i + 1 for i, block in enumerate(split_blocks(vec, sizes))
            if any(c % m for c in block)}


def pwpi_weight(vec, sizes, rel, table, m) -> int:
    """Weight per the definition: maximal blocks by value, the rest at max."""
    max_w = max(table)
    ideal = down_closure(support_labels(vec, sizes, m), rel)
    maxima = maximal_of(ideal, rel)
    blocks = split_blocks(vec, sizes)
    total = 0
    for lbl in ideal:
        if lbl in maxima:
            total += max(table[c % m] for c in blocks[lbl - 1])
        else:
            total += max_w
    return total


def ppi_weight(vec, sizes, rel, m) -> int:
    """Cardinality of the ideal generated by the support."""
    return len(down_closure(support_labels(vec, sizes, m), rel))


def pw_weight(vec, rel, table, m) -> int:
    """Single-coordinate variant: each label owns one coordinate."""
    return pwpi_weight(vec, [1] * len(vec), rel, table, m)


def p_weight(vec, rel, m) -> int:
    """Single-coordinate, all-or-nothing weight: just the ideal size."""
    return ppi_weight(vec, [1] * len(vec), rel, m)


def pi_weight(vec, sizes, m) -> int:
    """Number of nonzero blocks (no order involved)."""
    return len(support_labels(vec, sizes, m))


# -- specialized shell-count formulas ---------------------------------------------


def ideals_by_cardinality(n, rel):
    buckets: dict[int, list[frozenset[int]]] = {}
    for ideal in all_ideals(n, rel):
        buckets.setdefault(len(ideal), []).append(ideal)
    return buckets


def ppi_shells(n, rel, sizes, q) -> list[int]:
    """Ideal-cardinality metric shell counts, any blocks, from the ideal sum."""
    buckets = ideals_by_cardinality(n, rel)
    counts = [0] * (n + 1)
    counts[0] = 1
    for r in range(1, n + 1):
        total = 0
        for ideal in buckets.get(r, ()):
            maxima = maximal_of(ideal, rel)
            prod = 1
            for lbl in maxima:
                prod *= q ** sizes[lbl - 1] - 1
            for lbl in ideal - maxima:
                prod *= q ** sizes[lbl - 1]
            total += prod
        counts[r] = total
    return counts


def ppi_chain_shells(order, sizes, q) -> list[int]:
    """Ideal-cardinality shells on a total order: one ideal per size."""
    counts = [1]
    below = 0
    for lbl in order:
        k = sizes[lbl - 1]
        counts.append((q ** k - 1) * q ** below)
        below += k
    return counts


def pi_shells(sizes, q) -> list[int]:
    """Nonzero-block-count shells: no order, choose which blocks are nonzero."""
    n = len(sizes)
    counts = [0] * (n + 1)
    for chosen in itertools.product([0, 1], repeat=n):
        prod = 1
        for bit, k in zip(chosen, sizes):
            if bit:
                prod *= q ** k - 1
        counts[sum(chosen)] += prod
    return counts


def pi_uniform_shell(n, k, q, r) -> int:
    return comb(n, r) * (q ** k - 1) ** r


def p_shells(n, rel, q) -> list[int]:
    """Single-coordinate ideal-cardinality shells."""
    return ppi_shells(n, rel, [1] * n, q)


def pw_chain_shells(order, table, q) -> list[int]:
    """Single-coordinate weighted shells on a total order."""
    max_w = max(table)
    class_size = [0] * (max_w + 1)
    for v in table:
        class_size[v] += 1
    n = len(order)
    counts = [0] * (n * max_w + 1)
    counts[0] = 1
    for t in range(n):
        for s in range(1, max_w + 1):
            counts[t * max_w + s] = q ** t * class_size[s]
    return counts
