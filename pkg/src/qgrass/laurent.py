"""Laurent polynomials in one variable q with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

IntLike = Union[int, "LaurentInt"]

_TERM = re.compile(r"\s*([+-]?\d+)\s*\*\s*q\s*\^\s*([+-]?\d+)\s*")


class LaurentInt:
    """An element of Z[q, q^-1], stored as a sparse exponent -> coefficient map.

    Values are immutable and always canonical (no zero coefficients), so
    structural equality is ring equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentInt:
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentInt:
        return cls._raw({0: c} if c else {})

    @classmethod
    def q(cls, k: int = 1, coeff: int = 1) -> LaurentInt:
        """The monomial coeff * q^k."""
        return cls._raw({k: coeff} if coeff else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other: IntLike) -> LaurentInt:
        if isinstance(other, LaurentInt):
            return other
        if isinstance(other, int):
            return LaurentInt.const(other)
        return NotImplemented

    def __add__(self, other: IntLike) -> LaurentInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentInt:
        return LaurentInt._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: IntLike) -> LaurentInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: IntLike) -> LaurentInt:
        return (-self) + other

    def __mul__(self, other: IntLike) -> LaurentInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentInt._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentInt:
        """Multiply by q^k."""
        return LaurentInt._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentInt:
        """Substitute q -> q^-1."""
        return LaurentInt._raw({-e: c for e, c in self._terms.items()})

    def __pow__(self, k: int) -> LaurentInt:
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentInt.q(e * k, c ** -k)
            raise ValueError("only signed monomials are invertible")
        out = LaurentInt.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"LaurentInt({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentInt:
        """Inverse of ``str``: accepts sums like ``-1*q^-1 + 1*q^3`` or ``0``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            m = _TERM.fullmatch(chunk)
            if not m:
                raise ValueError(f"malformed Laurent term {chunk!r} in {text!r}")
            terms.append((int(m.group(2)), int(m.group(1))))
        return cls(terms)


def neg_q_power(k: int) -> LaurentInt:
    """(-q)^k."""
    return LaurentInt.q(k, -1 if k % 2 else 1)


def eval_at_one(a: LaurentInt) -> int:
    """Specialise q = 1."""
    return sum(c for _, c in a.items())


ONE = LaurentInt.const(1)
ZERO = LaurentInt()
Q = LaurentInt.q(1)
