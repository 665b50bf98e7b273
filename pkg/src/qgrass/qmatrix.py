"""PBW normal forms in quantum matrix algebras and their partition subalgebras.

Generators ``x[i,j]`` obey, for ``j < l`` and ``i < k``::

    x[i,j] x[i,l] = q x[i,l] x[i,j]
    x[i,j] x[k,j] = q x[k,j] x[i,j]
    x[i,l] x[k,j] = x[k,j] x[i,l]
    x[k,l] x[i,j] = x[i,j] x[k,l] - (q - q^-1) x[i,l] x[k,j]

A monomial is stored as the sorted tuple of its generator boxes, repeats
allowed, so ``((1,1), (1,1), (2,3))`` is ``x[1,1]^2 x[2,3]``.  Normal forms
are computed by pushing one generator at a time into an already ordered
word and rewriting the out-of-order adjacent pair with the relations above.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from qgrass.laurent import ONE, LaurentInt, neg_q_power
from qgrass.shapes import Box, InvalidInput, Partition
from qgrass.torus import _split_top, format_coefficient, parse_coefficient

Word = tuple[Box, ...]

_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?")

LAPLACE_MODES = ("row-first-left", "row-last-right", "col-expression", "col-first-left", "col-last-right")


def ell(I: Iterable[int], J: Iterable[int]) -> int:
    """Number of pairs (i, j) in I x J with i > j."""
    J = list(J)
    return sum(1 for i in I for j in J if i > j)


def _accumulate(out: dict, word: Word, coeff: LaurentInt):
    c = out.get(word)
    c = coeff if c is None else c + coeff
    if c:
        out[word] = c
    else:
        out.pop(word, None)


class QMatrixAlgebra:
    """The quantum matrix algebra on an m x n grid, optionally cut down to a partition.

    ``inverse=True`` swaps the deformation parameter for its inverse, which
    gives the algebra with parameter q^-1 in the same generators.
    """

    def __init__(self, m: int, n: int, shape: Partition | None = None, inverse: bool = False):
        if m < 1 or n < 1:
            raise InvalidInput(f"matrix size must be positive, got {m}x{n}")
        if shape is not None and not shape.fits(m, n):
            raise InvalidInput(f"shape {shape.parts} does not fit {m}x{n}")
        self.m, self.n, self.shape, self.inverse = m, n, shape, inverse
        p = LaurentInt.q(-1 if inverse else 1)
        self.param = p
        self._swap_coeff = p ** -1
        self._nasty_coeff = -(p - p ** -1)
        self._rcache: dict = {}
        self._lcache: dict = {}
        self._boxes = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QMatrixAlgebra) and self._id() == other._id()

    def __hash__(self) -> int:
        return hash(self._id())

    def _id(self):
        return (self.m, self.n, self.shape, self.inverse)

    def __repr__(self) -> str:
        shape = f", shape={self.shape.parts}" if self.shape is not None else ""
        return f"QMatrixAlgebra({self.m}, {self.n}{shape}, inverse={self.inverse})"

    def contains(self, box: Box) -> bool:
        i, j = box
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            return False
        return self.shape is None or self.shape.contains(box)

    def _check_box(self, box: Box):
        if not self.contains(box):
            raise InvalidInput(f"x[{box[0]},{box[1]}] is not a generator of {self!r}")

    # construction

    def zero(self) -> PbwElement:
        return PbwElement(self, {})

    def one(self) -> PbwElement:
        return PbwElement(self, {(): ONE})

    def gen(self, i: int, j: int) -> PbwElement:
        self._check_box((i, j))
        return PbwElement(self, {((i, j),): ONE})

    def monomial(self, exps: Mapping[Box, int] | Iterable[Box], coeff=1) -> PbwElement:
        """A normal-ordered monomial given by an exponent map or a list of boxes."""
        word = _word_from(exps)
        for b in set(word):
            self._check_box(b)
        c = LaurentInt.const(coeff) if isinstance(coeff, int) else coeff
        return PbwElement(self, {word: c})

    def word(self, boxes: Sequence[Box], coeff=1) -> PbwElement:
        """The product of generators in the order written, brought to normal form."""
        for b in boxes:
            self._check_box(b)
        return PbwElement(self, self._word_product(tuple(boxes))) * (
            LaurentInt.const(coeff) if isinstance(coeff, int) else coeff
        )

    # rewriting core

    def _relation(self, small: Box, big: Box):
        """For ``small < big`` return ``(c, extra)`` with ``big*small = c*small*big + extra``.

        ``extra`` is ``None`` or ``(coeff, a, b)`` standing for ``coeff * x_a x_b``.
        """
        (i, j), (k, l) = small, big
        if i == k or j == l:
            return self._swap_coeff, None
        if l < j:
            return ONE, None
        return ONE, (self._nasty_coeff, (i, l), (k, j))

    def _rmul(self, w: Word, g: Box) -> dict[Word, LaurentInt]:
        """Normal form of ``w * x_g`` for a normal word ``w``."""
        if not w or w[-1] <= g:
            return {w + (g,): ONE}
        key = (w, g)
        hit = self._rcache.get(key)
        if hit is not None:
            return hit
        u, y = w[:-1], w[-1]
        c, extra = self._relation(g, y)
        out: dict[Word, LaurentInt] = {}
        for v, cv in self._rmul(u, g).items():
            for v2, c2 in self._rmul(v, y).items():
                _accumulate(out, v2, c * cv * c2)
        if extra is not None:
            cc, a, b = extra
            for v, cv in self._rmul(u, a).items():
                for v2, c2 in self._rmul(v, b).items():
                    _accumulate(out, v2, cc * cv * c2)
        self._rcache[key] = out
        return out

    def _lmul(self, g: Box, w: Word) -> dict[Word, LaurentInt]:
        """Normal form of ``x_g * w``, rewriting from the left end instead."""
        if not w or g <= w[0]:
            return {(g,) + w: ONE}
        key = (g, w)
        hit = self._lcache.get(key)
        if hit is not None:
            return hit
        y, rest = w[0], w[1:]
        c, extra = self._relation(y, g)
        out: dict[Word, LaurentInt] = {}
        for v, cv in self._lmul(g, rest).items():
            for v2, c2 in self._lmul(y, v).items():
                _accumulate(out, v2, c * cv * c2)
        if extra is not None:
            cc, a, b = extra
            for v, cv in self._lmul(b, rest).items():
                for v2, c2 in self._lmul(a, v).items():
                    _accumulate(out, v2, cc * cv * c2)
        self._lcache[key] = out
        return out

    def _word_product(self, boxes: Word, from_left: bool = False) -> dict[Word, LaurentInt]:
        cur: dict[Word, LaurentInt] = {(): ONE}
        seq = reversed(boxes) if from_left else boxes
        for g in seq:
            nxt: dict[Word, LaurentInt] = {}
            for w, c in cur.items():
                part = self._lmul(g, w) if from_left else self._rmul(w, g)
                for v, cv in part.items():
                    _accumulate(nxt, v, c * cv)
            cur = nxt
        return cur

    def multiply(self, a: PbwElement, b: PbwElement, from_left: bool = False) -> PbwElement:
        """Product ``a*b``.  ``from_left`` selects the alternative rewriting order."""
        if a.algebra != self or b.algebra != self:
            raise InvalidInput("cannot multiply elements of different algebras")
        out: dict[Word, LaurentInt] = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                if from_left:
                    cur: dict[Word, LaurentInt] = {w2: ONE}
                    for g in reversed(w1):
                        nxt: dict[Word, LaurentInt] = {}
                        for w, c in cur.items():
                            for v, cv in self._lmul(g, w).items():
                                _accumulate(nxt, v, c * cv)
                        cur = nxt
                else:
                    cur = {w1: ONE}
                    for g in w2:
                        nxt = {}
                        for w, c in cur.items():
                            for v, cv in self._rmul(w, g).items():
                                _accumulate(nxt, v, c * cv)
                        cur = nxt
                for w, c in cur.items():
                    _accumulate(out, w, c1 * c2 * c)
        return PbwElement(self, out)

    # minors

    def _inside(self, boxes: Iterable[Box]) -> bool:
        return all(self.contains(b) for b in boxes)

    def _check_index(self, rows: Sequence[int], cols: Sequence[int]):
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise InvalidInput(f"row set {list(rows)} and column set {list(cols)} differ in size")
        if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
            raise InvalidInput("minor indices must be strictly increasing")
        if any(not 1 <= i <= self.m for i in rows) or any(not 1 <= j <= self.n for j in cols):
            raise InvalidInput(f"minor indices {list(rows)}|{list(cols)} exceed {self.m}x{self.n}")
        return rows, cols

    def _signed(self, k: int) -> LaurentInt:
        return neg_q_power(k).bar() if self.inverse else neg_q_power(k)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> PbwElement:
        """Pseudo quantum minor: sum over s of (-q)^inv(s) x[i_1, j_s(1)] ... x[i_t, j_s(t)].

        Terms that use a generator outside the shape are dropped.
        """
        rows, cols = self._check_index(rows, cols)
        out: dict[Word, LaurentInt] = {}
        for perm in permutations(range(len(rows))):
            boxes = tuple((rows[a], cols[b]) for a, b in enumerate(perm))
            if not self._inside(boxes):
                continue
            sign = self._signed(sum(1 for x, y in combinations(perm, 2) if x > y))
            for w, c in self._word_product(boxes).items():
                _accumulate(out, w, sign * c)
        return PbwElement(self, out)

    def minor_by_columns(self, rows: Sequence[int], cols: Sequence[int]) -> PbwElement:
        """Sum over s of (-q)^inv(s) x[i_s(1), j_1] ... x[i_s(t), j_t]."""
        rows, cols = self._check_index(rows, cols)
        out: dict[Word, LaurentInt] = {}
        for perm in permutations(range(len(rows))):
            boxes = tuple((rows[a], cols[b]) for b, a in enumerate(perm))
            if not self._inside(boxes):
                continue
            sign = self._signed(sum(1 for x, y in combinations(perm, 2) if x > y))
            for w, c in self._word_product(boxes).items():
                _accumulate(out, w, sign * c)
        return PbwElement(self, out)

    def entry(self, i: int, j: int) -> PbwElement:
        return self.gen(i, j) if self.contains((i, j)) else self.zero()

    def laplace_expand(self, rows: Sequence[int], cols: Sequence[int], mode: str) -> PbwElement:
        """Evaluate one of the quantum Laplace expansions of the pseudo minor on (rows, cols)."""
        rows, cols = self._check_index(rows, cols)
        t = len(rows)
        if t == 0:
            return self.one()
        sign = self._signed
        total = self.zero()
        if mode == "row-first-left":
            for p in range(t):
                rest = cols[:p] + cols[p + 1:]
                total += sign(p) * (self.entry(rows[0], cols[p]) * self.minor(rows[1:], rest))
        elif mode == "row-last-right":
            for p in range(t):
                rest = cols[:p] + cols[p + 1:]
                total += sign(t - 1 - p) * (self.minor(rows[:-1], rest) * self.entry(rows[-1], cols[p]))
        elif mode == "col-expression":
            total = self.minor_by_columns(rows, cols)
        elif mode == "col-first-left":
            for p in range(t):
                rest = rows[:p] + rows[p + 1:]
                total += sign(p) * (self.entry(rows[p], cols[0]) * self.minor(rest, cols[1:]))
        elif mode == "col-last-right":
            for p in range(t):
                rest = rows[:p] + rows[p + 1:]
                total += sign(t - 1 - p) * (self.minor(rest, cols[:-1]) * self.entry(rows[p], cols[-1]))
        elif mode == "row-first-right":
            # valid for genuine quantum matrices, not for pseudo minors of proper shapes
            inv = self.param ** -1
            for p in range(t):
                rest = cols[:p] + cols[p + 1:]
                total += (-inv) ** p * (self.minor(rows[1:], rest) * self.entry(rows[0], cols[p]))
        else:
            raise InvalidInput(f"unknown Laplace mode {mode!r}")
        return total

    # monomial order

    def exponent_key(self, word: Word) -> tuple[int, ...]:
        """Exponent matrix flattened in lexicographic box order; tuples compare as matrix-lex."""
        counts = dict.fromkeys(self._boxes, 0)
        for b in word:
            counts[b] += 1
        return tuple(counts[b] for b in self._boxes)

    def parse(self, text: str) -> PbwElement:
        text = text.strip()
        if text == "0":
            return self.zero()
        out = self.zero()
        for chunk in _split_top(text, " + "):
            coeff_text, sep, mono_text = chunk.rpartition(" * ")
            if not sep:
                raise InvalidInput(f"malformed PBW term {chunk!r}")
            out += self.monomial(parse_word(mono_text), parse_coefficient(coeff_text))
        return out


def _word_from(exps) -> Word:
    if isinstance(exps, Mapping):
        return tuple(sorted(b for b, e in exps.items() for _ in range(e)))
    return tuple(sorted(exps))


def format_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for b in sorted(set(word)):
        e = word.count(b)
        parts.append(f"x[{b[0]},{b[1]}]" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    boxes: list[Box] = []
    for tok in text.split():
        m = _FACTOR.fullmatch(tok)
        if not m:
            raise InvalidInput(f"malformed PBW factor {tok!r}")
        boxes.extend([(int(m.group(1)), int(m.group(2)))] * int(m.group(3) or 1))
    return tuple(sorted(boxes))


class PbwElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QMatrixAlgebra, terms: Mapping[Word, LaurentInt]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def _lift(self, other) -> PbwElement:
        if isinstance(other, PbwElement):
            if other.algebra != self.algebra:
                raise InvalidInput("cannot combine elements of different algebras")
            return other
        if isinstance(other, (int, LaurentInt)):
            return PbwElement(self.algebra, {(): LaurentInt.const(other) if isinstance(other, int) else other})
        return NotImplemented

    def __add__(self, other) -> PbwElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return PbwElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> PbwElement:
        return PbwElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> PbwElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> PbwElement:
        if isinstance(other, (int, LaurentInt)):
            return PbwElement(self.algebra, {w: c * other for w, c in self.terms.items()})
        if isinstance(other, PbwElement):
            return self.algebra.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other) -> PbwElement:
        if isinstance(other, (int, LaurentInt)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> PbwElement:
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> set[int]:
        return {len(w) for w in self.terms}

    def sorted_terms(self) -> list[tuple[Word, LaurentInt]]:
        """Terms in descending matrix-lex order."""
        key = self.algebra.exponent_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_coefficient(c)} * {format_word(w)}" for w, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"PbwElement({str(self)!r})"


def leading_monomial(a: PbwElement) -> tuple[Word, LaurentInt]:
    if a.is_zero():
        raise InvalidInput("the zero element has no leading monomial")
    return a.sorted_terms()[0]


def occurs_factorization(
    algebra: QMatrixAlgebra, small: Mapping[Box, int] | Word, big: Mapping[Box, int] | Word
) -> tuple[int, Word] | None:
    """If ``x^small`` occurs in ``x^big``, return ``(k, rest)`` with ``x^big = q^k x^rest x^small + lower``.

    Raises ``AssertionError`` if the product fails to have the promised shape.
    """
    small_w, big_w = _word_from(small), _word_from(big)
    rest = list(big_w)
    for b in small_w:
        if b not in rest:
            return None
        rest.remove(b)
    rest_w = tuple(rest)
    prod = algebra.multiply(algebra.monomial(rest_w), algebra.monomial(small_w))
    lead, coeff = leading_monomial(prod)
    if lead != big_w or not coeff.is_monomial():
        raise AssertionError(f"unexpected leading term {format_word(lead)} with {coeff}")
    (k, c), = coeff.items()
    if c != 1:
        raise AssertionError(f"leading coefficient {coeff} is not a pure power of q")
    return k, rest_w


@lru_cache(maxsize=None)
def full_algebra(m: int, n: int, inverse: bool = False) -> QMatrixAlgebra:
    return QMatrixAlgebra(m, n, None, inverse)


def plucker(m: int, n: int, cols: Sequence[int], inverse: bool = False) -> PbwElement:
    """Maximal minor on all m rows and the given columns (zero if a column repeats)."""
    cols = tuple(cols)
    if len(cols) != m:
        raise InvalidInput(f"a Plucker coordinate needs {m} columns, got {list(cols)}")
    alg = full_algebra(m, n, inverse)
    if len(set(cols)) != m:
        return alg.zero()
    return alg.minor(tuple(range(1, m + 1)), tuple(sorted(cols)))


def plucker_relation_terms(m: int, J1: Sequence[int], J2: Sequence[int], K: Sequence[int]):
    """Yield ``(exponent, left, right)`` for each surviving split of K into K' and K''."""
    J1, J2, K = tuple(J1), tuple(J2), tuple(sorted(K))
    if len(J1) > m or len(J2) > m or len(K) != 2 * m - len(J1) - len(J2) or len(K) <= m:
        raise InvalidInput(
            f"need |J1|,|J2| <= m and |K| = 2m - |J1| - |J2| > m; got {list(J1)}, {list(J2)}, {list(K)}"
        )
    for Kp in combinations(K, m - len(J1)):
        Kpp = tuple(k for k in K if k not in Kp)
        left, right = set(J1) | set(Kp), set(Kpp) | set(J2)
        if len(left) < m or len(right) < m:
            continue
        exp = ell(J1, Kp) + ell(Kp, Kpp) + ell(Kpp, J2)
        yield exp, tuple(sorted(left)), tuple(sorted(right))


def plucker_relation_lhs(m: int, n: int, J1, J2, K, inverse: bool = False) -> PbwElement:
    alg = full_algebra(m, n, inverse)
    total = alg.zero()
    for exp, left, right in plucker_relation_terms(m, J1, J2, K):
        total += alg._signed(exp) * (plucker(m, n, left, inverse) * plucker(m, n, right, inverse))
    return total


def muir_lift(terms, D: Sequence[int], m: int, n: int, inverse: bool = False) -> PbwElement:
    """Sum of c [I+D][J+D] over ``terms = [(c, I, J), ...]`` as maximal minors of an m x n matrix."""
    D = set(D)
    alg = full_algebra(m, n, inverse)
    total = alg.zero()
    for c, I, J in terms:
        if D & set(I) or D & set(J):
            raise InvalidInput(f"lifting set {sorted(D)} overlaps {list(I)} or {list(J)}")
        c = LaurentInt.const(c) if isinstance(c, int) else c
        total += c * (plucker(m, n, sorted(set(I) | D), inverse) * plucker(m, n, sorted(set(J) | D), inverse))
    return total


def ore_identity_holds(i: int, j: int, k: int, l: int, d: int) -> bool:
    """Check x_ij x_kl^(d+1) = x_kl^d (x_ij x_kl + (q^(2d+1) - q) x_il x_kj)."""
    if not (i < k and j < l):
        raise InvalidInput(f"({i},{j}) must lie strictly north-west of ({k},{l})")
    if d < 0:
        raise InvalidInput("d must be non-negative")
    alg = full_algebra(k, l)
    a, b = alg.gen(i, j), alg.gen(k, l)
    lhs = a * b ** (d + 1)
    rhs = b ** d * (a * b + (LaurentInt.q(2 * d + 1) - LaurentInt.q(1)) * (alg.gen(i, l) * alg.gen(k, j)))
    return lhs == rhs
