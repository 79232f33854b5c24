"""Independent brute-force generating functions.

Everything here enumerates objects directly (tableau fillings, tree
labelings, level counts) without touching the operator pipeline, so these
sums can serve as ground truth for the operator-based polynomials.
"""

from __future__ import annotations

from functools import lru_cache

from .gmodule import BasisElement, LatticeInstance
from .polyring import MultiPoly

__all__ = ["ssyt_polynomial", "tree_labeling_polynomial", "count_level", "LABELING_KINDS"]


# ---------------------------------------------------------------------------
# semistandard tableaux on skew shapes
# ---------------------------------------------------------------------------

def ssyt_polynomial(lam, mu, n: int) -> MultiPoly:
    """Content generating function of semistandard fillings of lam/mu with entries <= n.

    Rows weakly increase, columns strictly increase.  Cells are filled row by
    row; each cell only needs its left and upper neighbours, so partial
    fillings prune early.
    """
    lam = lam.data if isinstance(lam, BasisElement) else tuple(lam)
    mu = mu.data if isinstance(mu, BasisElement) else tuple(mu)
    mu = mu + (0,) * (len(lam) - len(mu))
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ValueError("mu is not contained in lam")

    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    fill = {}
    out = MultiPoly.zero(n)
    weight = [0] * n

    def rec(idx):
        nonlocal out
        if idx == len(cells):
            out = out + MultiPoly.monomial(n, tuple(weight))
            return
        r, c = cells[idx]
        lo = fill.get((r, c - 1), 1)
        hi = n
        above = fill.get((r - 1, c))
        for val in range(max(lo, (above or 0) + 1), hi + 1):
            fill[(r, c)] = val
            weight[val - 1] += 1
            rec(idx + 1)
            weight[val - 1] -= 1
            del fill[(r, c)]

    rec(0)
    return out


# ---------------------------------------------------------------------------
# tree labelings
# ---------------------------------------------------------------------------

# (relation into left subtree, relation into right subtree)
LABELING_KINDS = {
    "right-strict": (lambda a, b: a <= b, lambda a, b: a < b),
    "left-strict": (lambda a, b: a < b, lambda a, b: a <= b),
    "binary-search": (lambda a, b: a >= b, lambda a, b: a < b),
}


def enumerate_labelings(tree, kind: str, n: int):
    """All maps from tree nodes to {1..n} satisfying the subtree constraints.

    The constraints relate each node to *every* ancestor (not just the
    parent): for an ancestor w with the node in the subtree under w1 the left
    relation applies, under w2 the right relation.
    """
    left_rel, right_rel = LABELING_KINDS[kind]
    words = tree.data if isinstance(tree, BasisElement) else tuple(tree)
    words = sorted(words, key=lambda w: (len(w), w))
    labeling = {}
    results = []

    def ok(w, val):
        for p in range(len(w)):
            anc_label = labeling[w[:p]]
            rel = left_rel if w[p] == "1" else right_rel
            if not rel(anc_label, val):
                return False
        return True

    def rec(idx):
        if idx == len(words):
            results.append(dict(labeling))
            return
        w = words[idx]
        for val in range(1, n + 1):
            if ok(w, val):
                labeling[w] = val
                rec(idx + 1)
                del labeling[w]

    rec(0)
    return results


def tree_labeling_polynomial(tree, kind: str, n: int) -> MultiPoly:
    """Sum of t^phi over all labelings of the given kind with labels <= n."""
    if kind not in LABELING_KINDS:
        raise ValueError(f"unknown labeling kind {kind!r}")
    out = MultiPoly.zero(n)
    for labeling in enumerate_labelings(tree, kind, n):
        weight = [0] * n
        for val in labeling.values():
            weight[val - 1] += 1
        out = out + MultiPoly.monomial(n, tuple(weight))
    return out


# ---------------------------------------------------------------------------
# level counting, independent of the instance enumerators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _partition_count(n, max_part):
    if n == 0:
        return 1
    return sum(_partition_count(n - first, first) for first in range(min(n, max_part), 0, -1))


@lru_cache(maxsize=None)
def _strict_partition_count(n, max_part):
    if n == 0:
        return 1
    return sum(
        _strict_partition_count(n - first, first - 1)
        for first in range(min(n, max_part), 0, -1)
    )


def _structural_trees(n):
    """All binary trees with n nodes as nested (left, right) pairs; None is empty."""
    if n == 0:
        return [None]
    out = []
    for left_size in range(n):
        for left in _structural_trees(left_size):
            for right in _structural_trees(n - 1 - left_size):
                out.append((left, right))
    return out


def count_level(inst: LatticeInstance, k: int) -> int:
    """Size of level k by direct enumeration, bypassing the instance's own enumerator."""
    if k < 0:
        raise ValueError("rank must be nonnegative")
    if inst.kind == "partition":
        return _partition_count(k, k)
    if inst.kind == "strict":
        return _strict_partition_count(k, k)
    if inst.kind == "tree":
        return len(_structural_trees(k))
    return 1
