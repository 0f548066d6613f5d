"""The character zeta, chromatic symmetric functions and chromatic polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np

from .core import (BuildingSet, SetFamily, bits, minimalization, restriction,
                   submasks)
from .errors import CrossCheckError, InputError, guard
from .symfunc import (Composition, Partition, PSymElement, QSymElement,
                      compositions)

PSI_LIMIT = 12
SUBSET_LIMIT = 20
LATTICE_LIMIT = 9
COLORING_LIMIT = 10 ** 7


class ChromaticPolynomial:
    """Integer polynomial in one variable, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "ChromaticPolynomial":
        return cls([0] * k + [a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, m: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * m + c
        return out

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ChromaticPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self):
        return ChromaticPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChromaticPolynomial(other * x for x in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return ChromaticPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ChromaticPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*m^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


def _falling(k: int) -> list[int]:
    """Coefficients of m(m-1)...(m-k+1)."""
    p = [1]
    for i in range(k):
        q = [0] * (len(p) + 1)
        for j, c in enumerate(p):
            q[j + 1] += c
            q[j] -= i * c
        p = q
    return p


# ---------------------------------------------------------------------------
# zeta_alpha and the monomial expansion
# ---------------------------------------------------------------------------

def _zeta(table: list[bool], mask: int, parts: tuple, memo: dict) -> int:
    if not parts:
        return 1 if mask == 0 else 0
    key = (mask, parts)
    if key in memo:
        return memo[key]
    first, rest = parts[0], parts[1:]
    total = 0
    for block in combinations(list(bits(mask)), first):
        j = 0
        for e in block:
            j |= 1 << e
        if table[j]:
            total += _zeta(table, mask ^ j, rest, memo)
    memo[key] = total
    return total


def zeta_alpha(b: BuildingSet, alpha, _memo: dict | None = None) -> int:
    """Ordered decompositions into blocks of sizes ``alpha`` with discrete restrictions."""
    alpha = Composition(alpha)
    if alpha.weight != b.n:
        raise InputError(f"composition {alpha!r} has weight {alpha.weight}, rank is {b.n}")
    return _zeta(b.discrete_table, b.ground, tuple(alpha), {} if _memo is None else _memo)


def flag_f_vector(b: BuildingSet) -> dict[Composition, int]:
    guard("rank for the flag f-vector", b.n, PSI_LIMIT)
    memo: dict = {}
    return {a: zeta_alpha(b, a, memo) for a in compositions(b.n)}


def psi_monomial(b: BuildingSet) -> QSymElement:
    """The chromatic symmetric function in the monomial quasi-symmetric basis."""
    return QSymElement(flag_f_vector(b))


def chromatic_polynomial(b: BuildingSet) -> ChromaticPolynomial:
    """sum_alpha zeta_alpha(b) * binom(m, k(alpha)), expanded in powers of m."""
    by_length: dict[int, int] = {}
    for alpha, z in flag_f_vector(b).items():
        by_length[len(alpha)] = by_length.get(len(alpha), 0) + z
    acc = [Fraction(0)] * (b.n + 1)
    for k, total in by_length.items():
        for i, c in enumerate(_falling(k)):
            acc[i] += Fraction(total * c, factorial(k))
    if any(x.denominator != 1 for x in acc):
        raise CrossCheckError("non-integral chromatic polynomial coefficient")
    return ChromaticPolynomial(int(x) for x in acc)


# ---------------------------------------------------------------------------
# expansions over subsets of the minimal generators
# ---------------------------------------------------------------------------

def subset_components(n: int, sets: tuple[int, ...]):
    """Yield ``(|S|, block masks)`` for every subfamily ``S`` of ``sets``.

    Blocks are the nontrivial connected components of the closure of ``S``;
    elements outside every block are isolated rank-1 components.
    """
    def walk(i: int, size: int, blocks: tuple[int, ...]):
        if i == len(sets):
            yield size, blocks
            return
        yield from walk(i + 1, size, blocks)
        t = sets[i]
        merged = t
        keep = []
        for blk in blocks:
            if blk & t:
                merged |= blk
            else:
                keep.append(blk)
        keep.append(merged)
        yield from walk(i + 1, size + 1, tuple(keep))

    yield from walk(0, 0, ())


def _component_count(n: int, blocks: tuple[int, ...]) -> int:
    covered = 0
    for blk in blocks:
        covered |= blk
    return len(blocks) + n - covered.bit_count()


def psi_powersum_subsets(b: BuildingSet) -> PSymElement:
    """sum over S in C_min of (-1)^|S| p_lambda(S)."""
    cmin = b.c_min
    guard("number of minimal generators", len(cmin), SUBSET_LIMIT)
    out: dict = {}
    for size, blocks in subset_components(b.n, cmin):
        covered = 0
        for blk in blocks:
            covered |= blk
        lam = Partition([blk.bit_count() for blk in blocks] + [1] * (b.n - covered.bit_count()))
        out[lam] = out.get(lam, 0) + (-1) ** size
    return PSymElement(out)


def chromatic_polynomial_subsets(b: BuildingSet) -> ChromaticPolynomial:
    """sum over S in C_min of (-1)^|S| m^c(S)."""
    cmin = b.c_min
    guard("number of minimal generators", len(cmin), SUBSET_LIMIT)
    coeffs = [0] * (b.n + 1)
    for size, blocks in subset_components(b.n, cmin):
        coeffs[_component_count(b.n, blocks)] += (-1) ** size
    return ChromaticPolynomial(coeffs)


def chi_minus_one_subsets(b: BuildingSet) -> int:
    return chi_minus_one_antichain(SetFamily(b.n, b.c_min))


def chi_minus_one_antichain(l: SetFamily) -> int:
    """chi(B(l), -1) straight from a generating antichain, without the closure."""
    if not l.is_antichain():
        raise InputError("expected an antichain")
    guard("number of minimal generators", len(l), SUBSET_LIMIT)
    return sum((-1) ** (size + _component_count(l.n, blocks))
               for size, blocks in subset_components(l.n, l.sets))


def minus_one_invariant(b: BuildingSet) -> int:
    """chi(b, -1), by polynomial evaluation and by the subset formula."""
    via_poly = chromatic_polynomial(b)(-1)
    via_subsets = chi_minus_one_subsets(b)
    if via_poly != via_subsets:
        raise CrossCheckError(
            f"chi(b,-1): polynomial gives {via_poly}, subset formula {via_subsets}")
    return via_poly


# ---------------------------------------------------------------------------
# lattice of connected partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectedPartitionLattice:
    """Partitions of the ground set whose blocks are members of the minimalization.

    ``elements`` are tuples of block masks sorted by least element;
    ``moebius[pi]`` is mu(0, pi).
    """

    n: int
    elements: tuple[tuple[int, ...], ...]
    moebius: dict

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.n))

    @staticmethod
    def leq(sigma: tuple[int, ...], pi: tuple[int, ...]) -> bool:
        """``sigma`` refines ``pi``."""
        return all(any(s & p == s for p in pi) for s in sigma)

    @staticmethod
    def type(pi: tuple[int, ...]) -> Partition:
        return Partition(blk.bit_count() for blk in pi)


def connected_partition_lattice(b: BuildingSet) -> ConnectedPartitionLattice:
    guard("rank for the connected partition lattice", b.n, LATTICE_LIMIT)
    check = minimalization(b)
    members = check.member_set

    def parts(mask: int):
        if mask == 0:
            yield ()
            return
        low = mask & -mask
        for blk in submasks(mask ^ low):
            blk |= low
            if blk in members:
                for rest in parts(mask ^ blk):
                    yield (blk,) + rest

    # mu(0, pi) is the product over blocks, the interval below pi being the
    # product of the lattices of the restrictions to the blocks.
    block_mu: dict[int, int] = {}

    def mu_block(blk: int) -> int:
        if blk in block_mu:
            return block_mu[blk]
        if blk.bit_count() == 1:
            block_mu[blk] = 1
            return 1
        total = 0
        for sigma in parts(blk):
            if sigma == (blk,):
                continue
            prod = 1
            for s in sigma:
                prod *= mu_block(s)
            total += prod
        block_mu[blk] = -total
        return -total

    elements = tuple(parts(b.ground))
    moebius = {}
    for pi in elements:
        prod = 1
        for blk in pi:
            prod *= mu_block(blk)
        moebius[pi] = prod
    return ConnectedPartitionLattice(b.n, elements, moebius)


def psi_powersum_moebius(b: BuildingSet) -> PSymElement:
    """sum over connected partitions pi of mu(0, pi) p_type(pi)."""
    lat = connected_partition_lattice(b)
    out: dict = {}
    for pi in lat.elements:
        lam = lat.type(pi)
        out[lam] = out.get(lam, 0) + lat.moebius[pi]
    return PSymElement(out)


# ---------------------------------------------------------------------------
# brute-force colourings and free sets
# ---------------------------------------------------------------------------

def count_proper_colorings(c_min: SetFamily, m: int) -> int:
    """Maps X -> [m] that are not constant on any set of ``c_min`` (size >= 2)."""
    n = c_min.n
    if m < 0:
        raise InputError("number of colours must be nonnegative")
    if n == 0:
        return 1
    if m == 0:
        return 0
    guard("m^n colourings", m ** n, COLORING_LIMIT)
    idx = np.arange(m ** n, dtype=np.int64)
    digits = (idx[:, None] // (m ** np.arange(n, dtype=np.int64))) % m
    ok = np.ones(m ** n, dtype=bool)
    for s in c_min.sets:
        el = list(bits(s))
        if len(el) < 2:
            continue
        cols = digits[:, el]
        ok &= ~(cols == cols[:, :1]).all(axis=1)
    return int(ok.sum())


def free_set_reduce(b: BuildingSet) -> tuple[list[ChromaticPolynomial], BuildingSet]:
    """Strip free minimal generators, collecting their chromatic factors.

    A minimal generator ``S`` is free when it meets the union of the others in
    at most one point.  Its private elements are removed and the factor
    ``m^|S| - m`` (no shared point) or ``m^(|S|-1) - 1`` (one shared point)
    recorded.  The product of the factors and chi(residual) is chi(b).
    """
    factors = []
    cur = minimalization(b)
    while True:
        cmin = cur.c_min
        pick = None
        for s in cmin:
            rest = 0
            for t in cmin:
                if t != s:
                    rest |= t
            if (s & rest).bit_count() <= 1:
                pick = (s, s & rest)
                break
        if pick is None:
            break
        s, shared = pick
        k = s.bit_count()
        if shared == 0:
            factors.append(ChromaticPolynomial.monomial(k) - ChromaticPolynomial.monomial(1))
        else:
            factors.append(ChromaticPolynomial.monomial(k - 1) - ChromaticPolynomial([1]))
        cur = restriction(cur, cur.ground ^ (s & ~shared))
    total = chromatic_polynomial_subsets(cur)
    for f in factors:
        total = total * f
    if total != chromatic_polynomial_subsets(b):
        raise CrossCheckError("free-set factorisation disagrees with chi(b)")
    return factors, cur
