"""Quantum tori attached to Le diagrams.

The torus of a diagram has one invertible generator ``t[i,j]`` per white
box.  Two generators in the same row or column q-commute, the lex-earlier
one picking up ``q`` when moved to the left of the later one:
``t_a t_b = q t_b t_a`` for ``a < b``.  All other pairs commute.

Monomials are kept as tuples ``((box, exponent), ...)`` in ascending box
order, so a monomial is literally the ordered product of its factors.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from qgrass.laurent import ONE, LaurentInt, eval_at_one
from qgrass.shapes import Box, InvalidInput, LeDiagram

TorusMonomial = tuple[tuple[Box, int], ...]
Scalar = Union[int, LaurentInt]

_FACTOR = re.compile(r"t\[(\d+),(\d+)\](?:\^(-?\d+))?")


def _interacts(a: Box, b: Box) -> bool:
    return a[0] == b[0] or a[1] == b[1]


def monomial_product(left: TorusMonomial, right: TorusMonomial) -> tuple[int, TorusMonomial]:
    """Return ``(k, m)`` with ``left * right = q^k m`` and ``m`` normal-ordered.

    Sorting the concatenation swaps every pair ``(a, b)`` with ``a`` in
    ``left``, ``b`` in ``right`` and ``b < a``; each such interacting swap of
    ``t_a^x`` past ``t_b^y`` costs ``q^(-x*y)``.
    """
    k = 0
    for a, x in left:
        for b, y in right:
            if b < a and _interacts(a, b):
                k -= x * y
    exps = dict(left)
    for b, y in right:
        e = exps.get(b, 0) + y
        if e:
            exps[b] = e
        else:
            exps.pop(b, None)
    return k, tuple(sorted(exps.items()))


def format_monomial(mono: TorusMonomial) -> str:
    if not mono:
        return "1"
    return "".join(f"t[{i},{j}]" + (f"^{e}" if e != 1 else "") for (i, j), e in mono)


def parse_monomial(text: str) -> TorusMonomial:
    text = text.strip()
    if text == "1":
        return ()
    pos, exps = 0, {}
    for m in _FACTOR.finditer(text):
        if m.start() != pos:
            break
        box = (int(m.group(1)), int(m.group(2)))
        exps[box] = exps.get(box, 0) + int(m.group(3) or 1)
        pos = m.end()
    if pos != len(text) or not exps:
        raise InvalidInput(f"malformed torus monomial {text!r}")
    return tuple(sorted((b, e) for b, e in exps.items() if e))


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


def format_coefficient(c: LaurentInt) -> str:
    return str(c) if c.is_monomial() else f"({c})"


def parse_coefficient(text: str) -> LaurentInt:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return LaurentInt.parse(text)


class QuantumTorus:
    """The torus generated by the white boxes of a Le diagram."""

    def __init__(self, white: Iterable[Box]):
        self.white = frozenset(white)

    @classmethod
    def of(cls, diagram: LeDiagram) -> QuantumTorus:
        return cls(diagram.white)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuantumTorus) and self.white == other.white

    def __hash__(self) -> int:
        return hash(self.white)

    def zero(self) -> TorusElement:
        return TorusElement(self, {})

    def one(self) -> TorusElement:
        return TorusElement(self, {(): ONE})

    def monomial(self, exps: Mapping[Box, int] | Iterable[tuple[Box, int]], coeff: Scalar = 1) -> TorusElement:
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[Box, int] = {}
        for b, e in items:
            if b not in self.white:
                raise InvalidInput(f"t{list(b)} is not a generator: box is not white")
            acc[b] = acc.get(b, 0) + e
        mono = tuple(sorted((b, e) for b, e in acc.items() if e))
        return TorusElement(self, {mono: LaurentInt.const(coeff) if isinstance(coeff, int) else coeff})

    def gen(self, box: Box, exponent: int = 1) -> TorusElement:
        return self.monomial({box: exponent})

    def word(self, *factors: tuple[Box, int]) -> TorusElement:
        """Ordered product of generator powers, in the order written."""
        out = self.one()
        for box, e in factors:
            out = out * self.gen(box, e)
        return out

    def parse(self, text: str) -> TorusElement:
        text = text.strip()
        if text == "0":
            return self.zero()
        out = self.zero()
        for chunk in _split_top(text, " + "):
            coeff_text, sep, mono_text = chunk.rpartition(" * ")
            if not sep:
                raise InvalidInput(f"malformed torus term {chunk!r}")
            out = out + self.monomial(parse_monomial(mono_text), parse_coefficient(coeff_text))
        return out


class TorusElement:
    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms: Mapping[TorusMonomial, LaurentInt]):
        self.torus = torus
        self.terms = {m: c for m, c in terms.items() if c}

    def _same(self, other: TorusElement):
        if self.torus != other.torus:
            raise InvalidInput("cannot combine elements of different quantum tori")

    def _lift(self, other) -> TorusElement:
        if isinstance(other, TorusElement):
            self._same(other)
            return other
        if isinstance(other, (int, LaurentInt)):
            return TorusElement(self.torus, {(): LaurentInt.const(other) if isinstance(other, int) else other})
        return NotImplemented

    def __add__(self, other) -> TorusElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TorusElement(self.torus, out)

    __radd__ = __add__

    def __neg__(self) -> TorusElement:
        return TorusElement(self.torus, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> TorusElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> TorusElement:
        if isinstance(other, (int, LaurentInt)):
            return TorusElement(self.torus, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._same(other)
        out: dict[TorusMonomial, LaurentInt] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                k, m = monomial_product(m1, m2)
                term = (c1 * c2).shift(k)
                out[m] = out[m] + term if m in out else term
        return TorusElement(self.torus, out)

    def __rmul__(self, other) -> TorusElement:
        if isinstance(other, (int, LaurentInt)):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.torus == other.torus and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{format_coefficient(c)} * {format_monomial(m)}" for m, c in sorted(self.terms.items())
        )

    def __repr__(self) -> str:
        return f"TorusElement({str(self)!r})"

    def eval_at_one(self):
        """Coefficient sums per monomial, i.e. the commutative shadow at q = 1."""
        return {m: eval_at_one(c) for m, c in self.terms.items() if eval_at_one(c)}
