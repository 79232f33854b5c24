"""Graded free module over the rational polynomial ring.

Basis elements live in a graded set with finite levels; formal vectors are
finite linear combinations with polynomial coefficients.  The natural
pairing makes the basis orthonormal, which is what turns operator series
like D(t1)...D(tn) into polynomial-valued coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import MultiPoly

KINDS = ("partition", "strict", "tree", "monomial")


# ---------------------------------------------------------------------------
# basis elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    """Tagged basis element: a partition, strict partition, tree ideal, or degree.

    `data` is a tuple of parts for the partition kinds, a canonically sorted
    tuple of {1,2}-words for trees, and a plain integer for the monomial kind.
    """

    kind: str
    data: object

    @property
    def rank(self) -> int:
        if self.kind == "monomial":
            return self.data
        return len(self.data) if self.kind == "tree" else sum(self.data)

    def encode(self):
        """JSON-able encoding: list of parts / list of words / bare integer."""
        if self.kind == "monomial":
            return self.data
        return list(self.data)

    def __repr__(self):
        if self.kind == "tree":
            return "{" + ",".join(w or "0" for w in self.data) + "}"
        if self.kind == "monomial":
            return f"deg({self.data})"
        return "(" + ",".join(str(p) for p in self.data) + ")"


def partition_elem(parts) -> BasisElement:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return BasisElement("partition", parts)


def strict_elem(parts) -> BasisElement:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"strict partition parts must be positive: {parts}")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"strict partition parts must be strictly decreasing: {parts}")
    return BasisElement("strict", parts)


def tree_word_key(w):
    return (len(w), w)


def tree_elem(words) -> BasisElement:
    """A planar binary tree: a prefix-closed finite set of words over {1,2}."""
    wordset = {str(w) for w in words}
    for w in wordset:
        if any(ch not in "12" for ch in w):
            raise ValueError(f"tree word {w!r} must use alphabet {{1,2}}")
        if w and w[:-1] not in wordset:
            raise ValueError(f"tree is not an order ideal: missing prefix of {w!r}")
    return BasisElement("tree", tuple(sorted(wordset, key=tree_word_key)))


def monomial_elem(d) -> BasisElement:
    d = int(d)
    if d < 0:
        raise ValueError("monomial degree must be nonnegative")
    return BasisElement("monomial", d)


_PARSERS = {
    "partition": partition_elem,
    "strict": strict_elem,
    "tree": tree_elem,
    "monomial": monomial_elem,
}


def parse_element(kind: str, value) -> BasisElement:
    """Build a BasisElement of the given kind from its decoded JSON encoding."""
    if kind not in _PARSERS:
        raise ValueError(f"unknown basis kind {kind!r}")
    if kind == "monomial":
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError("monomial element must be a bare integer")
        return monomial_elem(value)
    if not isinstance(value, list):
        raise ValueError(f"{kind} element must be a list, got {value!r}")
    return _PARSERS[kind](value)


# ---------------------------------------------------------------------------
# formal vectors
# ---------------------------------------------------------------------------

class FormalVector:
    """Finite linear combination of basis elements with MultiPoly coefficients."""

    __slots__ = ("kind", "nvars", "entries")

    def __init__(self, kind, nvars, entries=None):
        if kind not in KINDS:
            raise ValueError(f"unknown basis kind {kind!r}")
        clean = {}
        for b, p in (entries or {}).items():
            if b.kind != kind:
                raise ValueError(f"basis element {b!r} has kind {b.kind}, expected {kind}")
            if isinstance(p, (int, Fraction)):
                p = MultiPoly.const(nvars, p)
            if p.nvars != nvars:
                raise ValueError("coefficient variable-count mismatch")
            if p:
                clean[b] = p
        self.kind = kind
        self.nvars = nvars
        self.entries = clean

    @classmethod
    def basis_vector(cls, b: BasisElement, nvars: int):
        return cls(b.kind, nvars, {b: MultiPoly.one(nvars)})

    @classmethod
    def from_constants(cls, kind, nvars, coeffs):
        return cls(kind, nvars, coeffs)

    def __add__(self, other):
        if self.kind != other.kind or self.nvars != other.nvars:
            raise ValueError("cannot add vectors of different kind or nvars")
        entries = dict(self.entries)
        for b, p in other.entries.items():
            s = entries.get(b)
            entries[b] = p if s is None else s + p
        return FormalVector(self.kind, self.nvars, entries)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        """Scale by a Fraction/int or by a MultiPoly."""
        if isinstance(c, MultiPoly):
            return FormalVector(
                self.kind, self.nvars, {b: p * c for b, p in self.entries.items()}
            )
        return FormalVector(
            self.kind, self.nvars, {b: p.scale(c) for b, p in self.entries.items()}
        )

    def coeff(self, b: BasisElement) -> MultiPoly:
        return self.entries.get(b, MultiPoly.zero(self.nvars))

    def restrict_rank(self, max_rank: int):
        return FormalVector(
            self.kind,
            self.nvars,
            {b: p for b, p in self.entries.items() if b.rank <= max_rank},
        )

    def max_rank(self) -> int:
        return max((b.rank for b in self.entries), default=0)

    def __eq__(self, other):
        if not isinstance(other, FormalVector):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.nvars == other.nvars
            and self.entries == other.entries
        )

    __hash__ = None

    def __bool__(self):
        return bool(self.entries)

    def __repr__(self):
        if not self.entries:
            return "FormalVector(0)"
        parts = [f"({p.text()})*{b!r}" for b, p in sorted(self.entries.items(), key=lambda kv: (kv[0].rank, repr(kv[0])))]
        return " + ".join(parts)

    def to_json_list(self):
        items = sorted(self.entries.items(), key=lambda kv: (kv[0].rank, repr(kv[0])))
        return [{"basis": b.encode(), "coeff": p.to_json_dict()} for b, p in items]


def pairing(w: FormalVector, v: FormalVector) -> MultiPoly:
    """Natural pairing: sum over shared basis elements of coefficient products."""
    if w.kind != v.kind:
        raise ValueError("pairing requires vectors over the same basis kind")
    if w.nvars != v.nvars:
        raise ValueError("pairing requires the same variable count")
    out = MultiPoly.zero(w.nvars)
    small, big = (w, v) if len(w.entries) <= len(v.entries) else (v, w)
    for b, p in small.entries.items():
        q = big.entries.get(b)
        if q is not None:
            out = out + p * q
    return out


# ---------------------------------------------------------------------------
# scalar sequences
# ---------------------------------------------------------------------------

class ASequence:
    """Deterministic sequence of exact rationals, memoized on demand."""

    def __init__(self, name, fn):
        self.name = name
        self._fn = fn
        self._memo = {}

    def __call__(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("sequence index must be nonnegative")
        if m not in self._memo:
            v = self._fn(m)
            self._memo[m] = v if isinstance(v, Fraction) else Fraction(v)
        return self._memo[m]

    def prefix(self, length: int):
        return tuple(self(m) for m in range(length))

    def __repr__(self):
        return f"ASequence({self.name})"


# ---------------------------------------------------------------------------
# lattice instances
# ---------------------------------------------------------------------------

class LatticeInstance:
    """A graded basis with raising/lowering operator families and a scalar sequence.

    `up(i, b)` and `down(i, b)` return sparse constant vectors as plain dicts
    from BasisElement to Fraction; grading demands support on rank(b)+i and
    rank(b)-i respectively.  Levels are finite and deterministically ordered.
    """

    def __init__(self, name, kind, a_seq, level_fn, up_fn, down_fn, minimum):
        self.name = name
        self.kind = kind
        self.a_seq = a_seq
        self.minimum = minimum
        self._level_fn = level_fn
        self._up_fn = up_fn
        self._down_fn = down_fn
        self._level_cache = {}
        self._up_cache = {}
        self._down_cache = {}
        self._dseries_cache = {}
        self._useries_cache = {}
        self._adjoint = None

    def level(self, k: int):
        if k < 0:
            return ()
        if k not in self._level_cache:
            self._level_cache[k] = tuple(self._level_fn(k))
        return self._level_cache[k]

    def rank(self, b: BasisElement) -> int:
        return b.rank

    def up(self, i: int, b: BasisElement):
        key = (i, b)
        if key not in self._up_cache:
            self._up_cache[key] = {c: v for c, v in self._up_fn(i, b).items() if v}
        return self._up_cache[key]

    def down(self, i: int, b: BasisElement):
        key = (i, b)
        if key not in self._down_cache:
            self._down_cache[key] = {c: v for c, v in self._down_fn(i, b).items() if v}
        return self._down_cache[key]

    def family(self, direction: str):
        if direction == "up":
            return self.up
        if direction == "down":
            return self.down
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")

    @property
    def u0(self) -> Fraction:
        if self.minimum is None:
            raise ValueError(f"instance {self.name} has no minimum")
        return self.up(0, self.minimum).get(self.minimum, Fraction(0))

    @property
    def d0(self) -> Fraction:
        if self.minimum is None:
            raise ValueError(f"instance {self.name} has no minimum")
        return self.down(0, self.minimum).get(self.minimum, Fraction(0))

    def __repr__(self):
        return f"LatticeInstance({self.name})"


def adjoint_instance(inst: LatticeInstance) -> LatticeInstance:
    """The dual pair built from adjoints: D* becomes the up family, U* the down family.

    Adjoints are realized level by level, which is exact because every level
    is finite-dimensional.
    """
    if inst._adjoint is not None:
        return inst._adjoint

    def up_fn(i, b):  # D*_i raises rank by i
        out = {}
        for c in inst.level(b.rank + i):
            coef = inst.down(i, c).get(b)
            if coef:
                out[c] = coef
        return out

    def down_fn(i, b):  # U*_i lowers rank by i
        out = {}
        for c in inst.level(b.rank - i):
            coef = inst.up(i, c).get(b)
            if coef:
                out[c] = coef
        return out

    adj = LatticeInstance(
        name=inst.name + "-adjoint",
        kind=inst.kind,
        a_seq=inst.a_seq,
        level_fn=inst.level,
        up_fn=up_fn,
        down_fn=down_fn,
        minimum=inst.minimum,
    )
    inst._adjoint = adj
    return adj


# ---------------------------------------------------------------------------
# operator series and generalized Schur polynomials
# ---------------------------------------------------------------------------

def apply_down_series(inst: LatticeInstance, var_index: int, v: FormalVector) -> FormalVector:
    """Apply D(t_k) = sum_i t_k^i D_i to v.

    The result is exact and finite: lowering by more than the rank of a
    component gives zero, so only i <= rank contribute.
    """
    if not 1 <= var_index <= v.nvars:
        raise ValueError(f"variable index {var_index} out of range for nvars={v.nvars}")
    out = {}
    zero = MultiPoly.zero(v.nvars)
    shift = [0] * v.nvars
    for b, p in v.entries.items():
        for i in range(b.rank + 1):
            img = inst.down(i, b)
            if not img:
                continue
            shift[var_index - 1] = i
            term = p.times_term(tuple(shift))
            for c, coef in img.items():
                out[c] = out.get(c, zero) + term.scale(coef)
    return FormalVector(v.kind, v.nvars, out)


def apply_up_series(inst: LatticeInstance, var_index: int, v: FormalVector, rank_cap: int) -> FormalVector:
    """Apply U(t_k) = sum_i t_k^i U_i to v, pruning components above rank_cap."""
    if not 1 <= var_index <= v.nvars:
        raise ValueError(f"variable index {var_index} out of range for nvars={v.nvars}")
    if v.entries and rank_cap < v.max_rank():
        raise ValueError("rank_cap must dominate every rank present in v")
    out = {}
    zero = MultiPoly.zero(v.nvars)
    shift = [0] * v.nvars
    for b, p in v.entries.items():
        for i in range(rank_cap - b.rank + 1):
            img = inst.up(i, b)
            if not img:
                continue
            shift[var_index - 1] = i
            term = p.times_term(tuple(shift))
            for c, coef in img.items():
                out[c] = out.get(c, zero) + term.scale(coef)
    return FormalVector(v.kind, v.nvars, out)


def d_series_vector(inst: LatticeInstance, b: BasisElement, n: int) -> FormalVector:
    """The full vector D(t_1)...D(t_n) b, cached per (basis, n)."""
    key = (b, n)
    cached = inst._dseries_cache.get(key)
    if cached is None:
        w = FormalVector.basis_vector(b, n)
        for k in range(n, 0, -1):
            w = apply_down_series(inst, k, w)
        inst._dseries_cache[key] = cached = w
    return cached


def u_series_vector(inst: LatticeInstance, b: BasisElement, n: int, rank_cap: int) -> FormalVector:
    """The vector U(t_n)...U(t_1) b truncated to ranks <= rank_cap, cached."""
    key = (b, n, rank_cap)
    cached = inst._useries_cache.get(key)
    if cached is None:
        w = FormalVector.basis_vector(b, n)
        for k in range(1, n + 1):
            w = apply_up_series(inst, k, w, rank_cap)
        inst._useries_cache[key] = cached = w
    return cached


def _as_constant_coeffs(v, n):
    """Normalize v (BasisElement | FormalVector | dict) to {basis: Fraction}."""
    if isinstance(v, BasisElement):
        return {v: Fraction(1)}
    if isinstance(v, FormalVector):
        return {b: p.constant_value() for b, p in v.entries.items()}
    return {b: Fraction(c) if not isinstance(c, Fraction) else c for b, c in v.items()}


def schur_D(inst: LatticeInstance, v, mu: BasisElement, n: int) -> MultiPoly:
    """The pairing <D(t_1)...D(t_n) v, mu> as an n-variable polynomial."""
    coeffs = _as_constant_coeffs(v, n)
    out = MultiPoly.zero(n)
    for b, c in coeffs.items():
        if c:
            out = out + d_series_vector(inst, b, n).coeff(mu).scale(c)
    return out


def schur_U(inst: LatticeInstance, mu: BasisElement, v, n: int) -> MultiPoly:
    """The pairing <U(t_n)...U(t_1) v, mu>.

    The series raises rank, so components of v above rank(mu) can never meet
    mu and are dropped; the raise cap rank(mu) makes the computation finite.
    """
    coeffs = _as_constant_coeffs(v, n)
    cap = mu.rank
    out = MultiPoly.zero(n)
    for b, c in coeffs.items():
        if c and b.rank <= cap:
            out = out + u_series_vector(inst, b, n, cap).coeff(mu).scale(c)
    return out


def op_matrix(inst: LatticeInstance, direction: str, i: int, source_level: int):
    """Matrix of U_i or D_i from level `source_level`, rows = target basis, cols = source."""
    fam = inst.family(direction)
    target_level = source_level + i if direction == "up" else source_level - i
    src = inst.level(source_level)
    tgt = inst.level(target_level)
    images = [fam(i, b) for b in src]
    return [[images[c].get(t, Fraction(0)) for c in range(len(src))] for t in tgt]


def adjoint_component(inst: LatticeInstance, direction: str, i: int, j: int):
    """Matrix of the adjoint component on level j.

    For direction 'up' this is U*_i : V_j -> V_{j-i}, the transpose of
    U_i : V_{j-i} -> V_j in the level bases; 'down' gives D*_i : V_j -> V_{j+i}.
    """
    if direction == "up":
        matrix = op_matrix(inst, "up", i, j - i)
    elif direction == "down":
        matrix = op_matrix(inst, "down", i, j + i)
    else:
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if not matrix:
        return []
    return [list(row) for row in zip(*matrix)]
