"""Compositions, partitions and sparse QSym / power-sum arithmetic."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator


class Composition(tuple):
    """An ordered tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def descent_set(self) -> frozenset[int]:
        """S(alpha): the proper partial sums, a subset of [n-1]."""
        out = []
        acc = 0
        for p in self[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    @classmethod
    def from_descents(cls, n: int, s: Iterable[int]) -> "Composition":
        if n == 0:
            return cls()
        cuts = sorted(s)
        pts = [0] + cuts + [n]
        return cls(b - a for a, b in zip(pts, pts[1:]))

    def opposite(self) -> "Composition":
        n = self.weight
        return Composition.from_descents(n, set(range(1, n)) - self.descent_set())

    def refines(self, other: "Composition") -> bool:
        """``self`` precedes ``other`` in the order by inclusion of descent sets."""
        return self.weight == other.weight and self.descent_set() <= other.descent_set()

    def partition(self) -> "Partition":
        return Partition(self)

    def __repr__(self) -> str:
        return f"({','.join(map(str, self))})"


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted(parts, reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"({','.join(map(str, self))})"


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` ordered by descent set size, then lexicographically."""
    if n == 0:
        yield Composition()
        return
    for k in range(n):
        for cut in combinations(range(1, n), k):
            yield Composition.from_descents(n, cut)


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    largest = n if largest is None else largest
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest)


def multinomial(parts: Iterable[int]) -> int:
    out = 1
    total = 0
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


def binomial(m: int, k: int) -> int:
    """Generalised binomial coefficient, a polynomial in ``m``."""
    num = 1
    for i in range(k):
        num *= m - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


class _Sparse:
    __slots__ = ("coeffs",)
    _key = tuple

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {self._key(k): v for k, v in (coeffs or {}).items() if v}

    def __add__(self, other):
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return type(self)(c)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a: int):
        return type(self)({k: a * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, key) -> int:
        return self.coeffs.get(self._key(key), 0)

    def items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), len(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{self._symbol}{k!r}" for k, v in self.items())


class QSymElement(_Sparse):
    """Integer combination of monomial quasi-symmetric functions M_alpha."""

    _key = Composition
    _symbol = "M"

    @classmethod
    def monomial(cls, alpha: Iterable[int], coeff: int = 1) -> "QSymElement":
        return cls({Composition(alpha): coeff})

    @classmethod
    def one(cls) -> "QSymElement":
        return cls({Composition(): 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return quasi_shuffle(self, other)

    __rmul__ = __mul__

    def is_symmetric(self) -> bool:
        """Coefficients constant on rearrangement classes of compositions."""
        by_shape: dict = {}
        for alpha, v in self.coeffs.items():
            by_shape.setdefault(Partition(alpha), set()).add(v)
        for lam, vals in by_shape.items():
            if len(vals) > 1:
                return False
            if len(set(_rearrangements(lam))) != sum(
                    1 for a in self.coeffs if Partition(a) == lam):
                return False
        return True


class PSymElement(_Sparse):
    """Integer combination of power-sum symmetric functions p_lambda."""

    _key = Partition
    _symbol = "p"

    @classmethod
    def power(cls, lam: Iterable[int], coeff: int = 1) -> "PSymElement":
        return cls({Partition(lam): coeff})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        c: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = Partition(k1 + k2)
                c[k] = c.get(k, 0) + v1 * v2
        return PSymElement(c)

    __rmul__ = __mul__


def _rearrangements(lam: tuple) -> Iterator[tuple]:
    if not lam:
        yield ()
        return
    for p in sorted(set(lam)):
        rest = list(lam)
        rest.remove(p)
        for tail in _rearrangements(tuple(rest)):
            yield (p,) + tail


@lru_cache(maxsize=None)
def _qsh(a: tuple, b: tuple) -> tuple:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: Counter = Counter()
    for w, c in _qsh(a[1:], b):
        out[(a[0],) + w] += c
    for w, c in _qsh(a, b[1:]):
        out[(b[0],) + w] += c
    for w, c in _qsh(a[1:], b[1:]):
        out[(a[0] + b[0],) + w] += c
    return tuple(out.items())


def quasi_shuffle(x: QSymElement, y: QSymElement) -> QSymElement:
    """Product in QSym: interleave the parts, optionally merging a pair."""
    c: dict = {}
    for a, va in x.coeffs.items():
        for b, vb in y.coeffs.items():
            for w, k in _qsh(tuple(a), tuple(b)):
                c[w] = c.get(w, 0) + va * vb * k
    return QSymElement(c)


@lru_cache(maxsize=None)
def _power_in_m(lam: Partition) -> QSymElement:
    out = QSymElement.one()
    for part in lam:
        out = quasi_shuffle(out, QSymElement.monomial((part,)))
    return out


def powersum_to_monomial(p: PSymElement) -> QSymElement:
    """Expand in the M basis using p_n = M_(n) and the quasi-shuffle product."""
    out = QSymElement()
    for lam, v in p.coeffs.items():
        out = out + _power_in_m(lam).scale(v)
    return out


def specialize(x: QSymElement | PSymElement, m: int) -> int:
    """Principal specialisation at ``x_1 = ... = x_m = 1`` (``m`` may be negative)."""
    if isinstance(x, QSymElement):
        return sum(v * binomial(m, len(a)) for a, v in x.coeffs.items())
    if isinstance(x, PSymElement):
        return sum(v * m ** len(lam) for lam, v in x.coeffs.items())
    raise TypeError(f"cannot specialise {type(x).__name__}")


def zeta_q_inverse_eval(x: QSymElement) -> int:
    return sum(v * (-1) ** len(a) for a, v in x.coeffs.items())
