"""Flag vectors, the ab-index and the cd-index of eulerian building sets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import sympy

from .chromatic import PSI_LIMIT, flag_f_vector
from .core import BuildingSet, submasks
from .errors import CrossCheckError, InputError, guard
from .eulerian import is_eulerian
from .symfunc import Composition

ANDRE_LIMIT = 12


class WordPolynomial:
    """Sum of words over a fixed alphabet with exact coefficients."""

    alphabet = ""
    degrees: dict[str, int] = {}
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        c = {}
        for w, v in (coeffs or {}).items():
            if any(ch not in self.alphabet for ch in w):
                raise InputError(f"word {w!r} uses letters outside {self.alphabet!r}")
            if v:
                c[w] = v
        self.coeffs = c

    @classmethod
    def word(cls, w: str, coeff=1):
        return cls({w: coeff})

    @classmethod
    def one(cls):
        return cls({"": 1})

    def __add__(self, other):
        c = dict(self.coeffs)
        for w, v in other.coeffs.items():
            c[w] = c.get(w, 0) + v
        return type(self)(c)

    def __neg__(self):
        return type(self)({w: -v for w, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, WordPolynomial):
            return type(self)({w: v * other for w, v in self.coeffs.items()})
        c: dict = {}
        for w1, v1 in self.coeffs.items():
            for w2, v2 in other.coeffs.items():
                c[w1 + w2] = c.get(w1 + w2, 0) + v1 * v2
        return type(self)(c)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = type(self).one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __getitem__(self, w: str):
        return self.coeffs.get(w, 0)

    def degree_of(self, w: str) -> int:
        return sum(self.degrees[ch] for ch in w)

    def items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: (self.degree_of(kv[0]), kv[0]))

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.coeffs.values())

    def to_int(self):
        if not self.is_integral():
            raise CrossCheckError(f"non-integral coefficients in {self!r}")
        return type(self)({w: int(v) for w, v in self.coeffs.items()})

    def __repr__(self) -> str:
        return " + ".join(f"{v}*{w or '1'}" for w, v in self.items()) or "0"


class NCPolynomial(WordPolynomial):
    alphabet = "ab"
    degrees = {"a": 1, "b": 1}

    def swap(self) -> "NCPolynomial":
        """Exchange the letters a and b."""
        t = str.maketrans("ab", "ba")
        return NCPolynomial({w.translate(t): v for w, v in self.coeffs.items()})


class CDPolynomial(WordPolynomial):
    alphabet = "cd"
    degrees = {"c": 1, "d": 2}


C = CDPolynomial.word("c")
D = CDPolynomial.word("d")
C2_MINUS_2D = C * C - D * 2


def expand_cd(p: CDPolynomial) -> NCPolynomial:
    """Substitute c = a + b and d = ab + ba."""
    sub = {"c": NCPolynomial({"a": 1, "b": 1}), "d": NCPolynomial({"ab": 1, "ba": 1})}
    out = NCPolynomial()
    for w, v in p.coeffs.items():
        term = NCPolynomial.one()
        for ch in w:
            term = term * sub[ch]
        out = out + term * v
    return out


# ---------------------------------------------------------------------------
# flag vectors and the ab-index
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlagVector:
    n: int
    f: dict
    h: dict

    def f_from_h(self) -> dict:
        """Invert the h-transform: zeta_alpha = sum of eta_beta over beta below alpha."""
        out = {}
        for alpha in self.f:
            s = sorted(alpha.descent_set())
            out[alpha] = sum(self.h[Composition.from_descents(self.n, sub)]
                             for sub in _subsets(s))
        return out


def _subsets(items: list) -> list[tuple]:
    out = [()]
    for x in items:
        out += [t + (x,) for t in out]
    return out


def flag_vectors(b: BuildingSet) -> FlagVector:
    guard("rank for flag vectors", b.n, PSI_LIMIT)
    f = flag_f_vector(b)
    h = {}
    for alpha in f:
        s = sorted(alpha.descent_set())
        total = 0
        for sub in _subsets(s):
            beta = Composition.from_descents(b.n, sub)
            total += (-1) ** (len(alpha) - len(beta)) * f[beta]
        h[alpha] = total
    return FlagVector(b.n, f, h)


def u_word(alpha: Composition) -> str:
    """Length n-1 word with b exactly at the positions of S(alpha)."""
    s = alpha.descent_set()
    return "".join("b" if i in s else "a" for i in range(1, alpha.weight))


def ab_index(b: BuildingSet) -> NCPolynomial:
    if b.n < 1:
        raise InputError("the ab-index needs rank >= 1")
    fv = flag_vectors(b)
    return NCPolynomial({u_word(a): v for a, v in fv.h.items()})


# ---------------------------------------------------------------------------
# cd-index
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def omega(j: int) -> CDPolynomial:
    half = Fraction(1, 2)
    if j % 2:
        return C2_MINUS_2D ** ((j - 1) // 2) * C * half
    return C2_MINUS_2D ** (j // 2) * (-half)


@lru_cache(maxsize=None)
def delta(j: int) -> CDPolynomial:
    return C2_MINUS_2D ** ((j - 1) // 2) if j % 2 else CDPolynomial()


def _cd_recursive(b: BuildingSet) -> CDPolynomial:
    disc = b.discrete_table
    memo: dict[int, CDPolynomial] = {}

    def phi(mask: int) -> CDPolynomial:
        if mask in memo:
            return memo[mask]
        acc = delta(mask.bit_count()) if disc[mask] else CDPolynomial()
        for i in submasks(mask):
            if i and i != mask and disc[i]:
                acc = acc + omega(i.bit_count()) * phi(mask ^ i)
        memo[mask] = acc
        return acc

    return phi(b.ground)


def _cd_closed_form(b: BuildingSet) -> CDPolynomial:
    out = CDPolynomial()
    for alpha, z in flag_f_vector(b).items():
        if not z:
            continue
        term = CDPolynomial.one()
        for a in alpha[:-1]:
            term = term * omega(a)
        out = out + term * delta(alpha[-1]) * z
    return out


def cd_index(b: BuildingSet) -> CDPolynomial:
    """cd-index of an eulerian building set.

    The first-block recursion and the closed composition sum are both
    evaluated over exact rationals; they must agree, be integral, and expand
    back to the ab-index.
    """
    if b.n < 1:
        raise InputError("the cd-index needs rank >= 1")
    guard("rank for the cd-index", b.n, PSI_LIMIT)
    if not is_eulerian(b):
        raise InputError("the cd-index exists only for eulerian building sets")
    rec = _cd_recursive(b)
    closed = _cd_closed_form(b)
    if rec != closed:
        raise CrossCheckError("cd-index routes disagree")
    rec = rec.to_int()
    if expand_cd(rec) != ab_index(b):
        raise CrossCheckError("cd-index does not expand to the ab-index")
    return rec


def cd_index_routes(b: BuildingSet) -> tuple[CDPolynomial, CDPolynomial]:
    """Both cd routes without the eulerian precondition (for diagnostics)."""
    return _cd_recursive(b), _cd_closed_form(b)


@lru_cache(maxsize=None)
def andre_phi(n: int) -> CDPolynomial:
    """cd-index of D_n from the recursion in binomially weighted block sizes."""
    if not 1 <= n <= ANDRE_LIMIT:
        raise InputError(f"andre_phi needs 1 <= n <= {ANDRE_LIMIT}")
    acc = delta(n)
    for k in range(1, n):
        acc = acc + omega(k) * andre_phi(n - k) * comb(n, k)
    return acc.to_int()


def cd_words(degree: int) -> list[str]:
    if degree < 0:
        return []
    if degree == 0:
        return [""]
    out = ["c" + w for w in cd_words(degree - 1)]
    out += ["d" + w for w in cd_words(degree - 2)]
    return out


def is_cd_rewritable(p: NCPolynomial, degree: int) -> bool:
    """Whether ``p`` lies in the span of expanded cd-words of the given degree."""
    words = cd_words(degree)
    cols = [expand_cd(CDPolynomial.word(w)) for w in words]
    ab_words = sorted({w for col in cols for w in col.coeffs} | set(p.coeffs))
    a = sympy.Matrix([[col[w] for col in cols] for w in ab_words])
    rhs = sympy.Matrix([p[w] for w in ab_words])
    return a.rank() == a.row_join(rhs).rank()
