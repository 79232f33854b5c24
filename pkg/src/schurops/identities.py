"""Weighted complete symmetric polynomials and the identity-verification suite.

Every check is an exact comparison over the rationals.  Check functions
collect counterexamples instead of aborting, so a failing sweep reports all
offending inputs with both sides rendered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .gmodule import (
    ASequence,
    BasisElement,
    FormalVector,
    LatticeInstance,
    adjoint_instance,
    d_series_vector,
    pairing,
    schur_D,
    schur_U,
    u_series_vector,
)
from .instances import conjugate, partitions
from .oracle import ssyt_polynomial, tree_labeling_polynomial, count_level
from .polyring import MultiPoly

__all__ = [
    "CheckReport",
    "weighted_complete",
    "weighted_complete_by_product",
    "PartitionStats",
    "partition_stats",
    "b_from_a",
    "b_from_a_literal",
    "dual_a",
    "power_sum",
    "lam_complete",
    "check_commutation",
    "check_pieri",
    "check_pieri_minimum",
    "check_pieri_variants",
    "check_duality",
    "check_cauchy",
    "check_heisenberg",
    "sweep_pieri",
    "sweep_pieri_minimum",
    "sweep_variants",
    "sweep_duality",
    "sweep_cauchy",
    "sweep_heisenberg",
    "sweep_oracle",
    "IDENTITY_NAMES",
    "run_identity",
    "run_all",
]


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    """Outcome of one identity check: pass iff the counterexample list is empty."""

    identity: str
    instance: str
    ranges: dict
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self):
        return {
            "identity": self.identity,
            "instance": self.instance,
            "ranges": self.ranges,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
        }

    def text(self) -> str:
        ranges = " ".join(f"{k}={v}" for k, v in self.ranges.items())
        head = f"{'PASS' if self.passed else 'FAIL'} {self.identity} [{self.instance}] {ranges}"
        if self.passed:
            return head
        lines = [head]
        for ce in self.counterexamples:
            lines.append(f"  counterexample: {ce['input']}")
            lines.append(f"    lhs: {ce['lhs']}")
            lines.append(f"    rhs: {ce['rhs']}")
        return "\n".join(lines)


def _poly_json(p: MultiPoly):
    return p.to_json_dict()


def _const_json(c: Fraction):
    return MultiPoly.const(0, c).to_json_dict()


# ---------------------------------------------------------------------------
# sparse constant-vector helpers (dict from BasisElement to Fraction)
# ---------------------------------------------------------------------------

def _as_const_dict(v):
    if isinstance(v, BasisElement):
        return {v: Fraction(1)}
    if isinstance(v, FormalVector):
        return {b: p.constant_value() for b, p in v.entries.items()}
    return dict(v)


def _fam_apply_const(inst, direction, i, vec):
    fam = inst.family(direction)
    out = {}
    for b, c in vec.items():
        if not c:
            continue
        for t, w in fam(i, b).items():
            s = out.get(t, 0) + c * w
            if s:
                out[t] = s
            else:
                del out[t]
    return out


def _fam_apply_poly(inst, direction, i, v: FormalVector) -> FormalVector:
    fam = inst.family(direction)
    out = {}
    zero = MultiPoly.zero(v.nvars)
    for b, p in v.entries.items():
        for t, w in fam(i, b).items():
            out[t] = out.get(t, zero) + p.scale(w)
    return FormalVector(v.kind, v.nvars, out)


def _d_series_of_const(inst, vec, n) -> FormalVector:
    out = FormalVector(inst.kind, n)
    for b, c in vec.items():
        if c:
            out = out + d_series_vector(inst, b, n).scale(c)
    return out


def _u_series_of_const(inst, vec, n, cap) -> FormalVector:
    out = FormalVector(inst.kind, n)
    for b, c in vec.items():
        if c and b.rank <= cap:
            out = out + u_series_vector(inst, b, n, cap).scale(c)
    return out


def _vector_diff_counterexamples(lhs: FormalVector, rhs: FormalVector, base_input, ces):
    for b in sorted(set(lhs.entries) | set(rhs.entries), key=lambda x: (x.rank, repr(x))):
        lp, rp = lhs.coeff(b), rhs.coeff(b)
        if lp != rp:
            ces.append(
                {
                    "input": dict(base_input, at=b.encode()),
                    "lhs": _poly_json(lp),
                    "rhs": _poly_json(rp),
                }
            )


# ---------------------------------------------------------------------------
# weighted complete symmetric polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _wc_row(a: ASequence, i: int, n: int):
    """h_0..h_i over t_1..t_n via the one-variable-at-a-time recurrence."""
    if n == 1:
        return tuple(MultiPoly.monomial(1, (d,), a(d)) for d in range(i + 1))
    prev = _wc_row(a, i, n - 1)
    row = []
    for d in range(i + 1):
        acc = MultiPoly.zero(n)
        for j in range(d + 1):
            shift = (0,) * (n - 1) + (d - j,)
            acc = acc + prev[j].embed(n).times_term(shift, a(d - j))
        row.append(acc)
    return tuple(row)


def weighted_complete(a: ASequence, i: int, n: int) -> MultiPoly:
    """The coefficient of t^i in a(t_1 t)...a(t_n t), via the recurrence."""
    if i < 0 or n < 1:
        raise ValueError("need i >= 0 and n >= 1")
    return _wc_row(a, i, n)[i]


def weighted_complete_by_product(a: ASequence, i: int, n: int) -> MultiPoly:
    """Independent route: expand the truncated product in n+1 variables and extract.

    The tracking variable is slot n+1; after multiplying out, the terms with
    tracking exponent exactly i are the answer.
    """
    if i < 0 or n < 1:
        raise ValueError("need i >= 0 and n >= 1")
    poly = MultiPoly.one(n + 1)
    for k in range(1, n + 1):
        factor = MultiPoly.zero(n + 1)
        for m in range(i + 1):
            exps = [0] * (n + 1)
            exps[k - 1] = m
            exps[n] = m
            factor = factor + MultiPoly.monomial(n + 1, tuple(exps), a(m))
        poly = poly * factor
        poly = MultiPoly(n + 1, {e: c for e, c in poly.terms.items() if e[n] <= i})
    return MultiPoly(n, {e[:n]: c for e, c in poly.terms.items() if e[n] == i})


def power_sum(k: int, n: int) -> MultiPoly:
    """p_k(t_1..t_n) = t_1^k + ... + t_n^k."""
    out = MultiPoly.zero(n)
    for j in range(1, n + 1):
        out = out + MultiPoly.var(n, j, k)
    return out


def lam_complete(b_seq, i: int, n: int) -> MultiPoly:
    """Power-sum expansion sum over partitions of i of b_lam p_lam / z_lam."""
    out = MultiPoly.zero(n)
    for lam in partitions(i):
        coeff = Fraction(1, partition_stats(lam).z)
        term = MultiPoly.one(n)
        for part in lam:
            coeff *= b_seq(part)
            term = term * power_sum(part, n)
        out = out + term.scale(coeff)
    return out


# ---------------------------------------------------------------------------
# partition statistics and derived sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionStats:
    z: int
    multiplicities: tuple
    sgn: int


def partition_stats(lam) -> PartitionStats:
    """z_lam = prod i^{m_i} m_i!, with the sign (-1)^{sum (lam_i - 1)}."""
    parts = lam.data if isinstance(lam, BasisElement) else tuple(lam)
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for size, m in mult.items():
        fact = 1
        for x in range(2, m + 1):
            fact *= x
        z *= size**m * fact
    sgn = -1 if sum(p - 1 for p in parts) % 2 else 1
    return PartitionStats(z=z, multiplicities=tuple(sorted(mult.items())), sgn=sgn)


def _b_values(a: ASequence, L: int, normalized: bool):
    b = {}
    for l in range(1, L + 1):
        acc = Fraction(0)
        for lam in partitions(l):
            if lam and lam[0] < l:
                prod = Fraction(1)
                for part in lam:
                    prod *= b[part]
                acc += Fraction(prod, partition_stats(lam).z)
        b[l] = (a(l) - acc) * (l if normalized else 1)
    return b


def b_from_a(a: ASequence, L: int) -> ASequence:
    """The unique sequence with a_l = sum over partitions of l of b_lam / z_lam.

    Solved by b_l = z_(l) * (a_l - partial sum), extended lazily past L.
    """
    values = _b_values(a, max(L, 1), normalized=True)

    def fn(m):
        if m == 0:
            return a(0)
        top = max(values)
        if m > top:
            values.update(
                {l: v for l, v in _b_values(a, m, normalized=True).items() if l > top}
            )
        return values[m]

    return ASequence(f"b[{a.name}]", fn)


def b_from_a_literal(a: ASequence, L: int) -> ASequence:
    """The same recursion without the z_(l) factor, kept only for comparison."""
    values = _b_values(a, max(L, 1), normalized=False)
    return ASequence(
        f"b-literal[{a.name}]",
        lambda m: a(0) if m == 0 else values[m],
    )


def dual_a(a: ASequence, L: int) -> ASequence:
    """The dual sequence a'_l = sum over partitions of l of sgn(lam) b_lam / z_lam."""
    b = b_from_a(a, L)

    def fn(m):
        acc = Fraction(0)
        for lam in partitions(m):
            stats = partition_stats(lam)
            prod = Fraction(1)
            for part in lam:
                prod *= b(part)
            acc += Fraction(stats.sgn * prod, stats.z)
        return acc

    return ASequence(f"dual[{a.name}]", fn)


# ---------------------------------------------------------------------------
# commutation axiom
# ---------------------------------------------------------------------------

def check_commutation(inst: LatticeInstance, i_max: int, j_max: int, rank_cap: int) -> CheckReport:
    """Coefficient-wise commutation: D_j U_i = sum_k a_k U_{i-k} D_{j-k}."""
    a = inst.a_seq
    ces = []
    for r in range(rank_cap + 1):
        for b in inst.level(r):
            for i in range(i_max + 1):
                ui = inst.up(i, b)
                for j in range(j_max + 1):
                    lhs = _fam_apply_const(inst, "down", j, ui)
                    rhs = {}
                    for k in range(min(i, j) + 1):
                        ak = a(k)
                        if not ak:
                            continue
                        part = _fam_apply_const(
                            inst, "up", i - k, _fam_apply_const(inst, "down", j - k, {b: Fraction(1)})
                        )
                        for t, w in part.items():
                            s = rhs.get(t, 0) + ak * w
                            if s:
                                rhs[t] = s
                            else:
                                del rhs[t]
                    if lhs != rhs:
                        for t in sorted(set(lhs) | set(rhs), key=lambda x: (x.rank, repr(x))):
                            lc, rc = lhs.get(t, Fraction(0)), rhs.get(t, Fraction(0))
                            if lc != rc:
                                ces.append(
                                    {
                                        "input": {"basis": b.encode(), "i": i, "j": j, "at": t.encode()},
                                        "lhs": _const_json(lc),
                                        "rhs": _const_json(rc),
                                    }
                                )
    return CheckReport(
        "commutation",
        inst.name,
        {"i_max": i_max, "j_max": j_max, "rank_cap": rank_cap},
        ces,
    )


# ---------------------------------------------------------------------------
# Pieri and friends: point checks (literal transcriptions)
# ---------------------------------------------------------------------------

def _point_ranges(**kwargs):
    out = {}
    for key, value in kwargs.items():
        out[key] = value.encode() if isinstance(value, BasisElement) else value
    return out


def check_pieri(inst: LatticeInstance, v, mu: BasisElement, i: int, n: int) -> CheckReport:
    """s^D_{U_i v, mu} = sum_j h_{i-j} sum_{nu in Y_{k-j}} <U_j nu, mu> s^D_{v, nu}."""
    vdict = _as_const_dict(v)
    k = mu.rank
    lhs = schur_D(inst, _fam_apply_const(inst, "up", i, vdict), mu, n)
    rhs = MultiPoly.zero(n)
    for j in range(i + 1):
        inner = MultiPoly.zero(n)
        for nu in inst.level(k - j):
            coef = inst.up(j, nu).get(mu)
            if coef:
                inner = inner + schur_D(inst, vdict, nu, n).scale(coef)
        rhs = rhs + weighted_complete(inst.a_seq, i - j, n) * inner
    ces = []
    if lhs != rhs:
        ces.append(
            {
                "input": _point_ranges(v=_encode_vec(vdict), mu=mu, i=i, n=n),
                "lhs": _poly_json(lhs),
                "rhs": _poly_json(rhs),
            }
        )
    return CheckReport("pieri", inst.name, _point_ranges(v=_encode_vec(vdict), mu=mu, i=i, n=n), ces)


def _encode_vec(vdict):
    return [[b.encode(), str(c)] for b, c in sorted(vdict.items(), key=lambda kv: (kv[0].rank, repr(kv[0])))]


def check_pieri_minimum(inst: LatticeInstance, v, i: int, n: int) -> CheckReport:
    """At the minimum: s^D_{U_i v, 0} = u0 h_i s^D_{v, 0}; for v = 0 also d0^n u0 h_i."""
    if inst.minimum is None:
        raise ValueError(f"instance {inst.name} has no minimum")
    vdict = _as_const_dict(v)
    mins = inst.minimum
    h_i = weighted_complete(inst.a_seq, i, n)
    lhs = schur_D(inst, _fam_apply_const(inst, "up", i, vdict), mins, n)
    rhs = (h_i * schur_D(inst, vdict, mins, n)).scale(inst.u0)
    ces = []
    base = _point_ranges(v=_encode_vec(vdict), i=i, n=n)
    if lhs != rhs:
        ces.append({"input": dict(base, equation="corollary"), "lhs": _poly_json(lhs), "rhs": _poly_json(rhs)})
    if vdict == {mins: Fraction(1)}:
        closed = h_i.scale(inst.d0**n * inst.u0)
        if lhs != closed:
            ces.append({"input": dict(base, equation="minimum"), "lhs": _poly_json(lhs), "rhs": _poly_json(closed)})
    return CheckReport("pieri-min", inst.name, base, ces)


def _variant_series_point(inst, vdict, mu, i, n):
    """One side pair of: sum_kappa <D_i kappa, mu> s^U_{kappa, v} = sum_j h_{i-j} s^U_{mu, D_j v}."""
    lhs = MultiPoly.zero(n)
    for kappa in inst.level(mu.rank + i):
        coef = inst.down(i, kappa).get(mu)
        if coef:
            lhs = lhs + schur_U(inst, kappa, vdict, n).scale(coef)
    rhs = MultiPoly.zero(n)
    for j in range(i + 1):
        dj = _fam_apply_const(inst, "down", j, vdict)
        rhs = rhs + weighted_complete(inst.a_seq, i - j, n) * schur_U(inst, mu, dj, n)
    return lhs, rhs


def check_pieri_variants(inst: LatticeInstance, v, mu: BasisElement, i: int, n: int) -> CheckReport:
    """The three series/component variants, plus the minimum-case forms on adjoints."""
    adj = adjoint_instance(inst)
    vdict = _as_const_dict(v)
    base = _point_ranges(v=_encode_vec(vdict), mu=mu, i=i, n=n)
    ces = []

    def record(tag, lhs, rhs):
        if lhs != rhs:
            ces.append({"input": dict(base, equation=tag), "lhs": _poly_json(lhs), "rhs": _poly_json(rhs)})

    record("down-component", *_variant_series_point(inst, vdict, mu, i, n))

    sub = check_pieri(adj, vdict, mu, i, n)
    for ce in sub.counterexamples:
        ces.append({"input": dict(ce["input"], equation="adjoint-pieri"), "lhs": ce["lhs"], "rhs": ce["rhs"]})

    record("adjoint-down-component", *_variant_series_point(adj, vdict, mu, i, n))

    if inst.minimum is not None:
        mins = inst.minimum
        h_i = weighted_complete(inst.a_seq, i, n)
        lhs = schur_D(adj, _fam_apply_const(adj, "up", i, vdict), mins, n)
        rhs = (h_i * schur_D(adj, vdict, mins, n)).scale(inst.d0)
        record("adjoint-corollary", lhs, rhs)
        lhs0 = schur_D(adj, _fam_apply_const(adj, "up", i, {mins: Fraction(1)}), mins, n)
        record("adjoint-minimum", lhs0, h_i.scale(inst.u0**n * inst.d0))

    return CheckReport("variants", inst.name, base, ces)


def check_duality(inst: LatticeInstance, lam: BasisElement, mu: BasisElement, n: int) -> CheckReport:
    """Adjoint duality: series through one family equal series through its adjoint."""
    adj = adjoint_instance(inst)
    base = _point_ranges(lam=lam, mu=mu, n=n)
    ces = []

    def record(tag, lhs, rhs):
        if lhs != rhs:
            ces.append({"input": dict(base, equation=tag), "lhs": _poly_json(lhs), "rhs": _poly_json(rhs)})

    record("down-vs-adjoint-up", schur_D(inst, lam, mu, n), schur_U(adj, lam, mu, n))
    record("up-vs-adjoint-down", schur_U(inst, lam, mu, n), schur_D(adj, lam, mu, n))

    # the expansion identities, exercised on a small combination vector
    vdict = {lam: Fraction(1)}
    vdict[mu] = vdict.get(mu, Fraction(0)) + Fraction(2)

    def expansion(schur_side):
        out = MultiPoly.zero(n)
        for nu, c in vdict.items():
            out = out + schur_side(nu).scale(c)
        return out

    record("expand-1", schur_D(inst, vdict, mu, n), expansion(lambda nu: schur_U(adj, nu, mu, n)))
    record("expand-2", schur_U(adj, mu, vdict, n), expansion(lambda nu: schur_D(inst, mu, nu, n)))
    record("expand-3", schur_D(adj, vdict, mu, n), expansion(lambda nu: schur_U(inst, nu, mu, n)))
    record("expand-4", schur_U(inst, mu, vdict, n), expansion(lambda nu: schur_D(adj, mu, nu, n)))

    return CheckReport("duality", inst.name, base, ces)


# ---------------------------------------------------------------------------
# truncated Cauchy identity
# ---------------------------------------------------------------------------

def check_cauchy(inst: LatticeInstance, v, mu: BasisElement, n: int, deg_cap: int) -> CheckReport:
    """Both sides in 2n variables (t then t'), truncated to total degree deg_cap."""
    vdict = _as_const_dict(v)
    nn = 2 * n
    max_v_rank = max((b.rank for b in vdict), default=0)

    lhs = MultiPoly.zero(nn)
    nu_rank = 0
    while 2 * nu_rank - mu.rank - max_v_rank <= deg_cap:
        for nu in inst.level(nu_rank):
            p1 = schur_D(inst, nu, mu, n)
            if not p1:
                continue
            p2 = schur_U(inst, nu, vdict, n)
            if not p2:
                continue
            lhs = lhs + p1.embed(nn) * p2.embed(nn, offset=n)
        nu_rank += 1
    lhs = lhs.truncate(deg_cap)

    prod = MultiPoly.one(nn)
    for ti in range(1, n + 1):
        for tj in range(n + 1, nn + 1):
            factor = MultiPoly.zero(nn)
            for m in range(deg_cap // 2 + 1):
                exps = [0] * nn
                exps[ti - 1] = m
                exps[tj - 1] = m
                factor = factor + MultiPoly.monomial(nn, tuple(exps), inst.a_seq(m))
            prod = (prod * factor).truncate(deg_cap)

    inner = MultiPoly.zero(nn)
    for kappa_rank in range(min(mu.rank, max_v_rank) + 1):
        for kappa in inst.level(kappa_rank):
            q1 = schur_U(inst, mu, kappa, n)
            if not q1:
                continue
            q2 = schur_D(inst, vdict, kappa, n)
            if not q2:
                continue
            inner = inner + q1.embed(nn, offset=n) * q2.embed(nn)
    rhs = (prod * inner).truncate(deg_cap)

    base = _point_ranges(v=_encode_vec(vdict), mu=mu, n=n, deg_cap=deg_cap)
    ces = []
    if lhs != rhs:
        ces.append({"input": base, "lhs": _poly_json(lhs), "rhs": _poly_json(rhs)})
    return CheckReport("cauchy", inst.name, base, ces)


# ---------------------------------------------------------------------------
# Heisenberg commutators
# ---------------------------------------------------------------------------

def _heis_basis(inst, sign, m, b):
    """Apply B_m (sign=+1, lowering) or B_{-m} (sign=-1, raising) to one basis element.

    B_m = z_(m) * (D_m - sum over partitions lam of m with lam_1 < m of B_lam / z_lam),
    with B_lam the composition B_{lam_1} B_{lam_2} ... applied right to left;
    same shape with U for the raising version.
    """
    cache = getattr(inst, "_heis_cache", None)
    if cache is None:
        cache = inst._heis_cache = {}
    key = (sign, m, b)
    if key in cache:
        return cache[key]
    fam = inst.down if sign > 0 else inst.up
    acc = {t: Fraction(m) * w for t, w in fam(m, b).items()}
    for lam in partitions(m):
        if not lam or lam[0] >= m:
            continue
        vec = {b: Fraction(1)}
        for part in reversed(lam):
            vec = _heis_apply(inst, sign, part, vec)
        scale = Fraction(m, partition_stats(lam).z)
        for t, w in vec.items():
            s = acc.get(t, 0) - scale * w
            if s:
                acc[t] = s
            else:
                acc.pop(t, None)
    cache[key] = acc
    return acc


def _heis_apply(inst, sign, m, vec):
    out = {}
    for b, c in vec.items():
        for t, w in _heis_basis(inst, sign, m, b).items():
            s = out.get(t, 0) + c * w
            if s:
                out[t] = s
            else:
                del out[t]
    return out


def check_heisenberg(inst: LatticeInstance, l: int, k: int, rank_cap: int) -> CheckReport:
    """[B_l, B_{-l}] = l b_l I and, for k != l, [B_l, B_{-k}] = 0, on low ranks."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be positive")
    if rank_cap < l + k:
        raise ValueError("rank_cap must be at least l + k")
    bseq = b_from_a(inst.a_seq, max(l, k))
    b_zero_at = [m for m in range(1, max(l, k) + 1) if bseq(m) == 0]
    ces = []
    for r in range(rank_cap - max(l, k) + 1):
        for b in inst.level(r):
            vec = {b: Fraction(1)}
            pairs = [(l, l)] if l == k else [(l, l), (l, k)]
            for ll, kk in pairs:
                com = _heis_apply(inst, 1, ll, _heis_apply(inst, -1, kk, vec))
                neg = _heis_apply(inst, -1, kk, _heis_apply(inst, 1, ll, vec))
                for t, w in neg.items():
                    s = com.get(t, 0) - w
                    if s:
                        com[t] = s
                    else:
                        com.pop(t, None)
                expected = {b: ll * bseq(ll)} if ll == kk and bseq(ll) else {}
                if com != expected:
                    for t in sorted(set(com) | set(expected), key=lambda x: (x.rank, repr(x))):
                        lc, rc = com.get(t, Fraction(0)), expected.get(t, Fraction(0))
                        if lc != rc:
                            ces.append(
                                {
                                    "input": {"basis": b.encode(), "l": ll, "k": kk, "at": t.encode()},
                                    "lhs": _const_json(lc),
                                    "rhs": _const_json(rc),
                                }
                            )
    return CheckReport(
        "heisenberg",
        inst.name,
        {"l": l, "k": k, "rank_cap": rank_cap, "b_zero_at": b_zero_at},
        ces,
    )


# ---------------------------------------------------------------------------
# sweeps: vector-level fast paths covering full parameter grids
# ---------------------------------------------------------------------------

def sweep_pieri(inst: LatticeInstance, rank_cap: int, i_max: int, n_max: int) -> CheckReport:
    """Pieri for every v of rank <= rank_cap, every mu, i <= i_max, n <= n_max.

    Comparing D(t_1)..D(t_n) U_i v with sum_j h_{i-j} U_j D(t_1)..D(t_n) v as
    whole vectors checks the mu-indexed formula at every mu simultaneously.
    """
    a = inst.a_seq
    ces = []
    for n in range(1, n_max + 1):
        for r in range(rank_cap + 1):
            for v in inst.level(r):
                dv = d_series_vector(inst, v, n)
                lifted = [_fam_apply_poly(inst, "up", j, dv) for j in range(i_max + 1)]
                for i in range(i_max + 1):
                    lhs = _d_series_of_const(inst, inst.up(i, v), n)
                    rhs = FormalVector(inst.kind, n)
                    for j in range(i + 1):
                        rhs = rhs + lifted[j].scale(weighted_complete(a, i - j, n))
                    if lhs != rhs:
                        _vector_diff_counterexamples(
                            lhs, rhs, {"v": v.encode(), "i": i, "n": n}, ces
                        )
    return CheckReport(
        "pieri", inst.name, {"rank_cap": rank_cap, "i_max": i_max, "n_max": n_max}, ces
    )


def sweep_pieri_minimum(inst: LatticeInstance, rank_cap: int, i_max: int, n_max: int) -> CheckReport:
    mins = inst.minimum
    ces = []
    for n in range(1, n_max + 1):
        for r in range(rank_cap + 1):
            for v in inst.level(r):
                sv = d_series_vector(inst, v, n).coeff(mins)
                for i in range(i_max + 1):
                    h_i = weighted_complete(inst.a_seq, i, n)
                    lhs = _d_series_of_const(inst, inst.up(i, v), n).coeff(mins)
                    rhs = (h_i * sv).scale(inst.u0)
                    if lhs != rhs:
                        ces.append(
                            {
                                "input": {"v": v.encode(), "i": i, "n": n, "equation": "corollary"},
                                "lhs": _poly_json(lhs),
                                "rhs": _poly_json(rhs),
                            }
                        )
                    if v == mins:
                        closed = h_i.scale(inst.d0**n * inst.u0)
                        if lhs != closed:
                            ces.append(
                                {
                                    "input": {"v": v.encode(), "i": i, "n": n, "equation": "minimum"},
                                    "lhs": _poly_json(lhs),
                                    "rhs": _poly_json(closed),
                                }
                            )
    return CheckReport(
        "pieri-min", inst.name, {"rank_cap": rank_cap, "i_max": i_max, "n_max": n_max}, ces
    )


def _sweep_variant_series(inst, rank_cap, i_max, n_max, tag, ces):
    """Vector form of: D_i U(t_n)..U(t_1) = sum_j h_{i-j} U(t_n)..U(t_1) D_j."""
    a = inst.a_seq
    hi_cap = rank_cap + i_max
    for n in range(1, n_max + 1):
        for r in range(rank_cap + 1):
            for v in inst.level(r):
                uv_hi = u_series_vector(inst, v, n, hi_cap)
                downs = [
                    _u_series_of_const(inst, inst.down(j, v), n, rank_cap)
                    for j in range(i_max + 1)
                ]
                for i in range(i_max + 1):
                    lhs = _fam_apply_poly(inst, "down", i, uv_hi).restrict_rank(rank_cap)
                    rhs = FormalVector(inst.kind, n)
                    for j in range(i + 1):
                        rhs = rhs + downs[j].scale(weighted_complete(a, i - j, n))
                    rhs = rhs.restrict_rank(rank_cap)
                    if lhs != rhs:
                        _vector_diff_counterexamples(
                            lhs, rhs, {"v": v.encode(), "i": i, "n": n, "equation": tag}, ces
                        )


def sweep_variants(inst: LatticeInstance, rank_cap: int, i_max: int, n_max: int) -> CheckReport:
    adj = adjoint_instance(inst)
    ces = []
    _sweep_variant_series(inst, rank_cap, i_max, n_max, "down-component", ces)
    _sweep_variant_series(adj, rank_cap, i_max, n_max, "adjoint-down-component", ces)
    sub = sweep_pieri(adj, rank_cap, i_max, n_max)
    for ce in sub.counterexamples:
        ces.append({"input": dict(ce["input"], equation="adjoint-pieri"), "lhs": ce["lhs"], "rhs": ce["rhs"]})
    sub = sweep_pieri_minimum(adj, rank_cap, i_max, n_max)
    for ce in sub.counterexamples:
        ces.append({"input": dict(ce["input"], equation="adjoint-minimum"), "lhs": ce["lhs"], "rhs": ce["rhs"]})
    return CheckReport(
        "variants", inst.name, {"rank_cap": rank_cap, "i_max": i_max, "n_max": n_max}, ces
    )


def sweep_duality(inst: LatticeInstance, rank_cap: int, n_max: int) -> CheckReport:
    adj = adjoint_instance(inst)
    ces = []
    elements = [b for r in range(rank_cap + 1) for b in inst.level(r)]
    for n in range(1, n_max + 1):
        for lam in elements:
            dv = d_series_vector(inst, lam, n)
            adj_dv = d_series_vector(adj, lam, n)
            for mu in elements:
                lhs = dv.coeff(mu)
                rhs = u_series_vector(adj, mu, n, rank_cap).coeff(lam)
                if lhs != rhs:
                    ces.append(
                        {
                            "input": {"lam": lam.encode(), "mu": mu.encode(), "n": n, "equation": "down-vs-adjoint-up"},
                            "lhs": _poly_json(lhs),
                            "rhs": _poly_json(rhs),
                        }
                    )
                lhs = u_series_vector(inst, mu, n, rank_cap).coeff(lam)
                rhs = adj_dv.coeff(mu)
                if lhs != rhs:
                    ces.append(
                        {
                            "input": {"lam": lam.encode(), "mu": mu.encode(), "n": n, "equation": "up-vs-adjoint-down"},
                            "lhs": _poly_json(lhs),
                            "rhs": _poly_json(rhs),
                        }
                    )
    # expansion identities on combination vectors, at a smaller scale
    small = [b for r in range(min(rank_cap, 3) + 1) for b in inst.level(r)]
    for n in range(1, n_max + 1):
        for lam in small:
            for mu in small:
                sub = check_duality(inst, lam, mu, n)
                ces.extend(sub.counterexamples)
    return CheckReport("duality", inst.name, {"rank_cap": rank_cap, "n_max": n_max}, ces)


def sweep_cauchy(inst: LatticeInstance, rank_cap: int, n_max: int, deg_cap: int) -> CheckReport:
    ces = []
    elements = [b for r in range(rank_cap + 1) for b in inst.level(r)]
    for n in range(1, n_max + 1):
        for v in elements:
            for mu in elements:
                sub = check_cauchy(inst, v, mu, n, deg_cap)
                ces.extend(sub.counterexamples)
    return CheckReport(
        "cauchy", inst.name, {"rank_cap": rank_cap, "n_max": n_max, "deg_cap": deg_cap}, ces
    )


def sweep_heisenberg(inst: LatticeInstance, l_max: int, rank_cap: int) -> CheckReport:
    ces = []
    b_zero = ()
    for l in range(1, l_max + 1):
        for k in range(1, l_max + 1):
            eff_cap = max(rank_cap, l + k)
            sub = check_heisenberg(inst, l, k, eff_cap)
            ces.extend(sub.counterexamples)
            b_zero = sub.ranges["b_zero_at"]
    return CheckReport(
        "heisenberg",
        inst.name,
        {"l_max": l_max, "rank_cap": rank_cap, "b_zero_at": list(b_zero)},
        ces,
    )


# ---------------------------------------------------------------------------
# oracle comparisons
# ---------------------------------------------------------------------------

def _young_pairs(rank_cap):
    from .instances import partitions as _partitions

    for size in range(rank_cap + 1):
        for lam in _partitions(size):
            for msize in range(size + 1):
                for mu in _partitions(msize):
                    padded = mu + (0,) * (len(lam) - len(mu))
                    if len(mu) <= len(lam) and all(m <= l for m, l in zip(padded, lam)):
                        yield lam, mu


def sweep_oracle(inst: LatticeInstance, rank_cap: int, n_max: int) -> CheckReport:
    """Operator polynomials against direct enumeration, per instance kind."""
    from .gmodule import partition_elem, monomial_elem

    ces = []

    def record(tag, input_dict, lhs, rhs):
        if lhs != rhs:
            ces.append(
                {
                    "input": dict(input_dict, equation=tag),
                    "lhs": _poly_json(lhs),
                    "rhs": _poly_json(rhs),
                }
            )

    for n in range(1, n_max + 1):
        if inst.name == "young":
            for lam, mu in _young_pairs(rank_cap):
                expected = ssyt_polynomial(lam, mu, n)
                le, me = partition_elem(lam), partition_elem(mu)
                record("ssyt-vs-down", {"lam": list(lam), "mu": list(mu), "n": n},
                       schur_D(inst, le, me, n), expected)
                record("ssyt-vs-up", {"lam": list(lam), "mu": list(mu), "n": n},
                       schur_U(inst, le, me, n), expected)
        elif inst.name == "young-dual":
            for lam, mu in _young_pairs(rank_cap):
                expected = ssyt_polynomial(conjugate(lam), conjugate(mu), n)
                record("conjugate-ssyt-vs-up", {"lam": list(lam), "mu": list(mu), "n": n},
                       schur_U(inst, partition_elem(lam), partition_elem(mu), n), expected)
        elif inst.kind == "tree":
            up_kind = "right-strict" if inst.name == "tree" else "left-strict"
            mins = inst.minimum
            for r in range(rank_cap + 1):
                for t in inst.level(r):
                    record("labeling-vs-up", {"tree": t.encode(), "n": n},
                           schur_U(inst, t, mins, n), tree_labeling_polynomial(t, up_kind, n))
                    record("labeling-vs-down", {"tree": t.encode(), "n": n},
                           schur_D(inst, t, mins, n), tree_labeling_polynomial(t, "binary-search", n))
        elif inst.name == "monomial":
            for base in range(rank_cap + 1):
                for jump in range(rank_cap - base + 1):
                    hi, lo = monomial_elem(base + jump), monomial_elem(base)
                    closed = power_sum(1, n) ** jump
                    record("closed-form-up", {"base": base, "jump": jump, "n": n},
                           schur_U(inst, hi, lo, n), closed.scale(Fraction(1, _factorial(jump))))
                    record("closed-form-down", {"base": base, "jump": jump, "n": n},
                           schur_D(inst, hi, lo, n),
                           closed.scale(Fraction(_factorial(base + jump), _factorial(base) * _factorial(jump))))

    for k in range(rank_cap + 1):
        got = len(inst.level(k))
        want = count_level(inst, k)
        if got != want:
            ces.append(
                {
                    "input": {"rank": k, "equation": "level-count"},
                    "lhs": _const_json(Fraction(got)),
                    "rhs": _const_json(Fraction(want)),
                }
            )
    return CheckReport("oracle", inst.name, {"rank_cap": rank_cap, "n_max": n_max}, ces)


def _factorial(n):
    out = 1
    for x in range(2, n + 1):
        out *= x
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

IDENTITY_NAMES = (
    "commutation",
    "pieri",
    "pieri-min",
    "variants",
    "duality",
    "cauchy",
    "oracle",
    "heisenberg",
)


def run_identity(name, inst, *, rank_cap=4, i_max=3, j_max=None, n_max=2, deg_cap=4):
    """Run one named verification sweep and return its CheckReport.

    Two sweeps use reduced scopes for tractability, recorded in the report's
    ranges: cauchy caps basis ranks at 2 (the identity lives in 2n variables
    and grows quickly), and heisenberg caps l, k at 3.
    """
    j_max = i_max if j_max is None else j_max
    if name == "commutation":
        return check_commutation(inst, i_max, j_max, rank_cap)
    if name == "pieri":
        return sweep_pieri(inst, rank_cap, i_max, n_max)
    if name == "pieri-min":
        return sweep_pieri_minimum(inst, rank_cap, i_max, n_max)
    if name == "variants":
        return sweep_variants(inst, rank_cap, i_max, n_max)
    if name == "duality":
        return sweep_duality(inst, rank_cap, n_max)
    if name == "cauchy":
        return sweep_cauchy(inst, min(rank_cap, 2), min(n_max, 2), deg_cap)
    if name == "oracle":
        return sweep_oracle(inst, rank_cap, n_max)
    if name == "heisenberg":
        return sweep_heisenberg(inst, max(1, min(i_max, 3)), rank_cap)
    raise ValueError(f"unknown identity {name!r}")


def run_all(inst, **caps):
    return [run_identity(name, inst, **caps) for name in IDENTITY_NAMES]
