"""Sparse multivariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` throughout; there is no floating
point anywhere in the package.  Every polynomial fixes its variable count
at construction, and values with different variable counts never mix.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "MultiPoly",
    "poly_add",
    "poly_mul",
    "coeff_of",
    "is_symmetric",
    "truncate_total_degree",
]


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


def grlex_key(exps):
    """Sort key for the graded-lex term order: total degree, then t1-major lex."""
    return (sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Polynomial in t1..tn stored as a map from exponent tuples to nonzero Fractions.

    Values are immutable by convention: no method mutates `terms`, and all
    operations return fresh polynomials.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for nvars={nvars}")
            if any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"exponents must be nonnegative integers: {exps}")
            c = _coerce(c)
            if c:
                clean[exps] = c
        self.nvars = nvars
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars, index, power=1):
        """The monomial t_index^power, with 1-based variable index."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index - 1] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    # -- queries -----------------------------------------------------------

    def coeff(self, exps) -> Fraction:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent vector {exps} has wrong length for nvars={self.nvars}")
        return self.terms.get(exps, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The value of a degree-0 polynomial; raises if a variable occurs."""
        if any(any(exps) for exps in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_symmetric(self) -> bool:
        """True iff the polynomial is fixed by every adjacent-variable swap."""
        for k in range(self.nvars - 1):
            swapped = {}
            for exps, c in self.terms.items():
                e = list(exps)
                e[k], e[k + 1] = e[k + 1], e[k]
                swapped[tuple(e)] = c
            if swapped != self.terms:
                return False
        return True

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = _coerce(c)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {} if not c else {e: c * v for e, v in self.terms.items()}
        return out

    def times_term(self, exps, coeff=1):
        """Multiply by the single monomial coeff * t^exps (cheap exponent shift)."""
        exps = tuple(exps)
        coeff = _coerce(coeff)
        if not coeff:
            return MultiPoly.zero(self.nvars)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {
            tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()
        }
        return out

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative integer")
        result = MultiPoly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, d: int):
        """Drop all terms of total degree greater than d."""
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {e: c for e, c in self.terms.items() if sum(e) <= d}
        return out

    def embed(self, nvars: int, offset: int = 0):
        """Reinterpret in a larger variable set, shifting t_k to t_{k+offset}."""
        if offset < 0 or self.nvars + offset > nvars:
            raise ValueError("embedding does not fit")
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = nvars
        out.terms = {
            (0,) * offset + e + (0,) * (nvars - offset - self.nvars): c
            for e, c in self.terms.items()
        }
        return out

    # -- comparison / rendering --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        """Terms in graded-lex order (degree, then t1-major)."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def text(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for exps, c in self.sorted_terms():
            vars_part = "*".join(
                f"t{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(c)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            rendered.append((c < 0, body))
        first_neg, first = rendered[0]
        pieces = [("-" if first_neg else "") + first]
        for neg, body in rendered[1:]:
            pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    __str__ = text

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.text()!r})"

    def to_json_dict(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            data["nvars"],
            {tuple(t["exps"]): Fraction(t["coeff"]) for t in data["terms"]},
        )


# Functional aliases matching the operation-level surface.

def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def coeff_of(p: MultiPoly, exps) -> Fraction:
    return p.coeff(exps)


def is_symmetric(p: MultiPoly) -> bool:
    return p.is_symmetric()


def truncate_total_degree(p: MultiPoly, d: int) -> MultiPoly:
    return p.truncate(d)
