"""Sparse multivariate polynomials over exact rationals.

Just enough algebra to expand and compare continuant identities: addition,
multiplication, substitution, equality, and a canonical sorted-monomial text
form.  The indeterminates are the parameter ``c``, an auxiliary scalar ``d``
(for the scaling identity), and sequence variables ``x_j`` indexed by
arbitrary integers ``j``.  Indices are absolute positions, not list offsets,
so window-shifted identities (parity-sensitive sign flips) are expressible.

A monomial is a tuple of ``(var, exponent)`` pairs sorted by variable key;
a variable key is ``("c",)``, ``("d",)`` or ``("x", j)``.  No stored
coefficient is ever zero, so two polynomials are equal iff their term maps
are equal.
"""

from __future__ import annotations

from fractions import Fraction

C = ("c",)
D = ("d",)


def X(j: int) -> tuple:
    """The sequence variable at absolute position j."""
    return ("x", j)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _var_str(var: tuple) -> str:
    if var == C:
        return "c"
    if var == D:
        return "d"
    return f"x{var[1]}"


class Poly:
    """Immutable sparse polynomial; do not mutate ``terms`` after creation."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, q) -> "Poly":
        return cls({(): Fraction(q)})

    @classmethod
    def variable(cls, var: tuple) -> "Poly":
        return cls({((var, 1),): Fraction(1)})

    # -- ring operations ----------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return Poly(merged)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- structure ------------------------------------------------------

    def substitute(self, mapping: dict) -> "Poly":
        """Replace variables by polynomials; unmapped variables stay."""
        out = Poly.zero()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for var, exp in mono:
                base = mapping.get(var)
                if base is None:
                    base = Poly.variable(var)
                term = term * base ** exp
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        def mono_degree(m):
            return sum(e for _, e in m)
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-mono_degree(m), m)):
            coeff = self.terms[mono]
            factors = "*".join(
                _var_str(v) if e == 1 else f"{_var_str(v)}^{e}" for v, e in mono
            )
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = factors
            else:
                body = f"{abs(coeff)}*{factors}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"
