"""The concrete graded lattices.

Six configurations are exposed by name: Young's lattice with horizontal-strip
operators (`young`) and with the vertical-strip up family (`young-dual`),
shifted shapes with 2^cc weights (`shifted`), planar binary trees with
right-strict (`tree`) and left-strict (`tree-dual`) up families, and the
one-variable monomial ladder (`monomial`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .gmodule import (
    ASequence,
    BasisElement,
    LatticeInstance,
    monomial_elem,
    partition_elem,
    strict_elem,
    tree_elem,
    tree_word_key,
)

__all__ = [
    "partitions",
    "strict_partitions",
    "young_up",
    "young_down",
    "young_dual_up",
    "SkewComponentCount",
    "shifted_boxes",
    "shifted_cc",
    "shifted_up",
    "shifted_down",
    "tree_up_right",
    "tree_up_left",
    "tree_r_chain",
    "tree_evacuate",
    "tree_down",
    "mono_up",
    "mono_down",
    "SEQUENCES",
    "INSTANCE_NAMES",
    "get_instance",
    "level_enumerate",
]


# ---------------------------------------------------------------------------
# partition generation
# ---------------------------------------------------------------------------

def partitions(n, max_part=None):
    """Partitions of n in descending lexicographic order, as tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n, max_part=None):
    """Strictly decreasing partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Young's lattice: horizontal and vertical strips
# ---------------------------------------------------------------------------

def _as_parts(b):
    return b.data if isinstance(b, BasisElement) else tuple(b)


def _hstrip_additions(lam, i):
    """All mu obtained from lam by adding a horizontal strip of i boxes.

    Row-interlacing form of the strip condition: lam_{r-1} >= mu_r >= lam_r
    for every row, so no two added boxes share a column.
    """
    lam = tuple(lam) + (0,)
    rows = len(lam)
    out = []

    def rec(r, remaining, acc):
        if r == rows:
            if remaining == 0:
                out.append(tuple(x for x in acc if x))
            return
        lo = lam[r]
        hi = min(lam[r - 1] if r > 0 else lam[0] + remaining, lam[r] + remaining)
        for mu_r in range(lo, hi + 1):
            acc.append(mu_r)
            rec(r + 1, remaining - (mu_r - lam[r]), acc)
            acc.pop()

    rec(0, i, [])
    return out


def _hstrip_removals(lam, i):
    lam = tuple(lam)
    if i > sum(lam):
        return []
    padded = lam + (0,)
    out = []

    def rec(r, remaining, acc):
        if r == len(lam):
            if remaining == 0:
                out.append(tuple(x for x in acc if x))
            return
        lo = max(padded[r + 1], lam[r] - remaining)
        for mu_r in range(lo, lam[r] + 1):
            acc.append(mu_r)
            rec(r + 1, remaining - (lam[r] - mu_r), acc)
            acc.pop()

    rec(0, i, [])
    return out


def _vstrip_additions(lam, i):
    """All mu ⊇ lam with mu/lam a vertical strip of i boxes (row increments 0/1).

    A vertical strip may start up to i new rows, so lam is padded with i zeros.
    """
    lam = tuple(lam) + (0,) * max(i, 1)
    rows = len(lam)
    out = []

    def rec(r, remaining, acc):
        if remaining < 0:
            return
        if r == rows:
            if remaining == 0:
                out.append(tuple(x for x in acc if x))
            return
        for delta in (0, 1):
            mu_r = lam[r] + delta
            if r > 0 and mu_r > acc[r - 1]:
                continue
            acc.append(mu_r)
            rec(r + 1, remaining - delta, acc)
            acc.pop()

    rec(0, i, [])
    return out


def young_up(i, lam):
    """Horizontal-strip additions of i boxes, all with unit coefficient."""
    return {partition_elem(mu): Fraction(1) for mu in _hstrip_additions(_as_parts(lam), i)}


def young_down(i, lam):
    """Horizontal-strip removals of i boxes; empty dict when none exist."""
    return {partition_elem(mu): Fraction(1) for mu in _hstrip_removals(_as_parts(lam), i)}


def young_dual_up(i, lam):
    """Vertical-strip additions of i boxes."""
    return {partition_elem(mu): Fraction(1) for mu in _vstrip_additions(_as_parts(lam), i)}


def conjugate(lam):
    """Transpose of a partition."""
    lam = _as_parts(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


# ---------------------------------------------------------------------------
# shifted shapes
# ---------------------------------------------------------------------------

class SkewComponentCount(NamedTuple):
    cc: int
    cc0: int


def shifted_boxes(lam):
    """Box set of a strict partition: row r (1-based) occupies columns r..lam_r+r-1."""
    lam = _as_parts(lam)
    return frozenset(
        (r, c) for r, part in enumerate(lam, start=1) for c in range(r, part + r)
    )


def _skew_components(boxes):
    """Edge-connected components of a box set; returns (cc, cc0).

    cc0 counts the components that avoid the main diagonal r == c.
    """
    remaining = set(boxes)
    cc = cc0 = 0
    while remaining:
        seed = remaining.pop()
        stack = [seed]
        touches_diagonal = seed[0] == seed[1]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in remaining:
                    remaining.remove(nb)
                    if nb[0] == nb[1]:
                        touches_diagonal = True
                    stack.append(nb)
        cc += 1
        if not touches_diagonal:
            cc0 += 1
    return cc, cc0


def shifted_cc(lam, nu) -> SkewComponentCount:
    """Component counts of the skew shifted shape lam \\ nu."""
    big = shifted_boxes(lam)
    small = shifted_boxes(nu)
    if not small <= big:
        raise ValueError("nu is not contained in lam as shifted shapes")
    cc, cc0 = _skew_components(big - small)
    return SkewComponentCount(cc=cc, cc0=cc0)


def _diagonal_distinct(boxes):
    diags = [c - r for r, c in boxes]
    return len(diags) == len(set(diags))


def shifted_up(i, lam):
    """Add i boxes, no two on the same diagonal; coefficient 2^cc of the skew."""
    lam = _as_parts(lam)
    lam_boxes = shifted_boxes(lam)
    out = {}
    for mu in strict_partitions(sum(lam) + i, max_part=(lam[0] if lam else 0) + i):
        mu_boxes = shifted_boxes(mu)
        if not lam_boxes <= mu_boxes:
            continue
        skew = mu_boxes - lam_boxes
        if not _diagonal_distinct(skew):
            continue
        cc, _ = _skew_components(skew)
        out[strict_elem(mu)] = Fraction(2) ** cc
    return out


def shifted_down(i, lam):
    """Remove i boxes, no two on the same diagonal; coefficient 2^cc0 of the skew."""
    lam = _as_parts(lam)
    if i > sum(lam):
        return {}
    lam_boxes = shifted_boxes(lam)
    out = {}
    for nu in strict_partitions(sum(lam) - i, max_part=lam[0] if lam else 0):
        nu_boxes = shifted_boxes(nu)
        if not nu_boxes <= lam_boxes:
            continue
        skew = lam_boxes - nu_boxes
        if not _diagonal_distinct(skew):
            continue
        _, cc0 = _skew_components(skew)
        out[strict_elem(nu)] = Fraction(2) ** cc0
    return out


# ---------------------------------------------------------------------------
# planar binary trees
# ---------------------------------------------------------------------------

def _as_words(b):
    return b.data if isinstance(b, BasisElement) else tuple(b)


def _ideal_extensions(words, i, forbidden_child):
    """All ideals reached from `words` by adding i nodes, each added set once.

    Nodes are added in increasing (length, word) order, which enumerates every
    extension set exactly once.  With forbidden_child set to "2" (resp. "1"),
    no added node may acquire that child in the result, i.e. the addition is
    right-strict (resp. left-strict).
    """
    base = set(words)
    out = []

    def rec(current, added, last_key, todo):
        if todo == 0:
            out.append(tuple(sorted(current, key=tree_word_key)))
            return
        if current:
            candidates = {
                w + d
                for w in current
                for d in "12"
                if w + d not in current
            }
        else:
            candidates = {""}
        for cand in sorted(candidates, key=tree_word_key):
            key = tree_word_key(cand)
            if key <= last_key:
                continue
            if forbidden_child and cand[-1:] == forbidden_child and cand[:-1] in added:
                continue
            current.add(cand)
            added.add(cand)
            rec(current, added, key, todo - 1)
            added.remove(cand)
            current.remove(cand)

    rec(base, set(), (-1, ""), i)
    return out


def tree_up_right(i, tree):
    """Add i nodes right-strictly: no added node has a right child afterwards."""
    return {tree_elem(w): Fraction(1) for w in _ideal_extensions(_as_words(tree), i, "2")}


def tree_up_left(i, tree):
    """Add i nodes left-strictly: no added node has a left child afterwards."""
    return {tree_elem(w): Fraction(1) for w in _ideal_extensions(_as_words(tree), i, "1")}


def tree_r_chain(tree):
    """The evacuation chain of a tree, in increasing prefix order.

    A node w belongs when it has no right child and, for every factorization
    w = v1w', the node v has no right child either; the resulting set is
    totally ordered by the prefix order.
    """
    words = _as_words(tree)
    members = []
    wordset = set(words)
    for w in words:
        if w + "2" in wordset:
            continue
        if any(w[:p] + "2" in wordset for p in range(len(w)) if w[p] == "1"):
            continue
        members.append(w)
    members.sort(key=len)
    for a, b in zip(members, members[1:]):
        if not b.startswith(a):
            raise AssertionError(f"evacuation set of {words} is not a chain")
    return tuple(members)


def tree_evacuate(tree, w):
    """Delete the subtree at w and re-graft its left subtree in place of w."""
    words = set(_as_words(tree))
    if w not in words:
        raise ValueError(f"node {w!r} is not in the tree")
    if w + "2" in words:
        raise ValueError(f"node {w!r} has a right child; cannot evacuate")
    subtree = {u for u in words if u.startswith(w)}
    regraft = {w + u[len(w) + 1:] for u in subtree if u.startswith(w + "1")}
    return tree_elem((words - subtree) | regraft)


def tree_down(i, tree):
    """Evacuate the top i chain nodes (topmost first); zero when i exceeds the chain."""
    b = tree if isinstance(tree, BasisElement) else tree_elem(tree)
    if i == 0:
        return {b: Fraction(1)}
    chain = tree_r_chain(b)
    if i > len(chain):
        return {}
    result = b
    for w in reversed(chain[:i]):
        result = tree_evacuate(result, w)
    return {result: Fraction(1)}


# ---------------------------------------------------------------------------
# monomial ladder
# ---------------------------------------------------------------------------

def mono_up(i, d):
    """Raise degree by i with weight 1/i!."""
    deg = d.data if isinstance(d, BasisElement) else int(d)
    return {monomial_elem(deg + i): Fraction(1, math.factorial(i))}


def mono_down(i, d):
    """Lower degree by i with weight binomial(d, i); zero when i exceeds d."""
    deg = d.data if isinstance(d, BasisElement) else int(d)
    if i > deg:
        return {}
    return {monomial_elem(deg - i): Fraction(math.comb(deg, i))}


# ---------------------------------------------------------------------------
# sequences and the instance registry
# ---------------------------------------------------------------------------

SEQUENCES = {
    "ones": ASequence("ones", lambda m: Fraction(1)),
    "one-one": ASequence("one-one", lambda m: Fraction(1) if m <= 1 else Fraction(0)),
    "one-two": ASequence("one-two", lambda m: Fraction(1) if m == 0 else Fraction(2)),
    "inv-factorial": ASequence("inv-factorial", lambda m: Fraction(1, math.factorial(m))),
}


def _young_level(k):
    return [partition_elem(p) for p in partitions(k)]


def _shifted_level(k):
    return [strict_elem(p) for p in strict_partitions(k)]


def _tree_level(k):
    return [tree_elem(w) for w in sorted(_ideal_extensions((), k, None))]


def _mono_level(k):
    return [monomial_elem(k)]


_INSTANCE_SPECS = {
    "young": ("partition", "ones", _young_level, young_up, young_down, partition_elem(())),
    "young-dual": ("partition", "one-one", _young_level, young_dual_up, young_down, partition_elem(())),
    "shifted": ("strict", "one-two", _shifted_level, shifted_up, shifted_down, strict_elem(())),
    "tree": ("tree", "ones", _tree_level, tree_up_right, tree_down, tree_elem(())),
    "tree-dual": ("tree", "one-one", _tree_level, tree_up_left, tree_down, tree_elem(())),
    "monomial": ("monomial", "inv-factorial", _mono_level, mono_up, mono_down, monomial_elem(0)),
}

INSTANCE_NAMES = tuple(_INSTANCE_SPECS)

_instances = {}


def get_instance(name: str) -> LatticeInstance:
    """The shared instance registered under `name` (see INSTANCE_NAMES)."""
    if name not in _INSTANCE_SPECS:
        raise ValueError(f"unknown instance {name!r}; choose from {', '.join(INSTANCE_NAMES)}")
    if name not in _instances:
        kind, seq_name, level_fn, up_fn, down_fn, minimum = _INSTANCE_SPECS[name]
        _instances[name] = LatticeInstance(
            name=name,
            kind=kind,
            a_seq=SEQUENCES[seq_name],
            level_fn=level_fn,
            up_fn=up_fn,
            down_fn=down_fn,
            minimum=minimum,
        )
    return _instances[name]


def level_enumerate(inst: LatticeInstance, k: int):
    """All basis elements of rank k, canonically ordered."""
    if k < 0:
        raise ValueError("rank must be nonnegative")
    return inst.level(k)
