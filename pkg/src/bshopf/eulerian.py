"""Inverse character, eulerian detection and Bayer-Billera relations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .chromatic import (PSI_LIMIT, SUBSET_LIMIT, chi_minus_one_subsets,
                        chromatic_polynomial, flag_f_vector, subset_components)
from .core import ANTIPODE_LIMIT, BuildingSet, SetFamily, antipode, submasks
from .errors import CrossCheckError, guard
from .graphs import is_chordal, is_flag, is_odd_collection, nerve
from .symfunc import Composition, compositions, multinomial

EULERIAN_LIMIT = 14
BAYER_BILLERA_LIMIT = 10


def zeta(b: BuildingSet) -> int:
    return 1 if b.is_discrete else 0


def zeta_bar(b: BuildingSet) -> int:
    """The conjugate character: (-1)^n on discrete rank-n sets, else 0."""
    return (-1) ** b.n if b.is_discrete else 0


def zeta_inverse_table(b: BuildingSet) -> list[int]:
    """``table[J]`` is zeta^{-1}(b|_J) for every mask ``J``.

    Uses the convolution identity sum_I zeta^{-1}(b|_I) zeta(b|_{J-I}) = 0 for
    nonempty ``J``, i.e. peels off a nonempty discrete block ``K``.
    """
    guard("rank for the restriction scan", b.n, EULERIAN_LIMIT)
    disc = b.discrete_table
    table = [0] * (1 << b.n)
    table[0] = 1
    for j in range(1, 1 << b.n):
        acc = 0
        for k in submasks(j):
            if k and disc[k]:
                acc -= table[j ^ k]
        table[j] = acc
    return table


def _subset_formula_table(b: BuildingSet) -> list[int]:
    """zeta^{-1}(b|_J) for all ``J`` from the minimal-generator subset formula.

    Each subfamily ``S`` of ``C_min`` with union ``U`` contributes
    (-1)^(|S| + c_U(S) + |J| - |U|) to every ``J`` containing ``U``; the
    contributions are accumulated by a subset-sum transform.
    """
    n = b.n
    size = 1 << n
    g = [0] * size
    for count, blocks in subset_components(n, b.c_min):
        u = 0
        for blk in blocks:
            u |= blk
        g[u] += (-1) ** (count + len(blocks) + u.bit_count())
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if m & bit:
                g[m] += g[m ^ bit]
    return [(-1) ** m.bit_count() * g[m] for m in range(size)]


@dataclass(frozen=True)
class CharacterValueReport:
    """zeta^{-1}(b) with every route that ran (``None`` when guarded out)."""

    zeta_inv: int
    routes: dict = field(hash=False)
    conjugate: int


def zeta_inverse(b: BuildingSet) -> CharacterValueReport:
    """zeta^{-1}(b) by chi(b,-1), the subset formula and zeta composed with S."""
    routes: dict[str, int | None] = {
        "polynomial": chromatic_polynomial(b)(-1) if b.n <= PSI_LIMIT else None,
        "subsets": chi_minus_one_subsets(b) if len(b.c_min) <= SUBSET_LIMIT else None,
        "antipode": antipode(b).evaluate(zeta) if b.n <= ANTIPODE_LIMIT else None,
    }
    if b.n <= EULERIAN_LIMIT:
        routes["convolution"] = zeta_inverse_table(b)[-1]
    values = {v for v in routes.values() if v is not None}
    if len(values) != 1:
        raise CrossCheckError(f"zeta^-1 routes disagree: {routes}")
    return CharacterValueReport(values.pop(), routes, zeta_bar(b))


def is_eulerian(b: BuildingSet) -> bool:
    """Every restriction is discrete or has zeta^{-1} equal to zero."""
    table = zeta_inverse_table(b)
    disc = b.discrete_table
    return all(disc[j] or table[j] == 0 for j in range(1 << b.n))


def geometric_criterion(l: SetFamily) -> bool:
    """An odd antichain whose nerve is the clique complex of a chordal graph."""
    if not is_odd_collection(l):
        return False
    k = nerve(l)
    return is_flag(k) and is_chordal(k.one_skeleton())


def is_eulerian_geometric(b: BuildingSet) -> bool:
    """The geometric criterion applied to the minimal generators."""
    return geometric_criterion(SetFamily(b.n, b.c_min))


def dehn_sommerville_check(b: BuildingSet) -> bool:
    """(zeta^{-1} - conjugate zeta)(b|_J) = 0 for all ``J``.

    zeta^{-1} is taken from the subset formula when the minimal generators are
    few enough, otherwise from the convolution recursion.
    """
    guard("rank for the restriction scan", b.n, EULERIAN_LIMIT)
    if len(b.c_min) <= 16:
        inv = _subset_formula_table(b)
    else:
        inv = zeta_inverse_table(b)
    disc = b.discrete_table
    for j in range(1 << b.n):
        conj = (-1) ** j.bit_count() if disc[j] else 0
        if inv[j] != conj:
            return False
    return True


@dataclass(frozen=True)
class RelationViolation:
    alpha: Composition
    position: int
    value: int


def bayer_billera_check(b: BuildingSet) -> list[RelationViolation]:
    """Every (alpha, i) where the alternating sum of split flag numbers is nonzero.

    ``position`` counts from 1; zero parts produced by the split are dropped.
    """
    guard("rank for the Bayer-Billera relations", b.n, BAYER_BILLERA_LIMIT)
    f = flag_f_vector(b)
    out = []
    for alpha in compositions(b.n):
        for i, a in enumerate(alpha):
            total = 0
            for j in range(a + 1):
                parts = alpha[:i] + (j, a - j) + alpha[i + 1:]
                total += (-1) ** j * f[Composition(p for p in parts if p)]
            if total:
                out.append(RelationViolation(alpha, i + 1, total))
    return out


def multinomial_identity_check(n: int) -> bool:
    """sum over alpha |= n of (-1)^k(alpha) multinomial(n; alpha) == (-1)^n."""
    total = sum((-1) ** len(a) * multinomial(a) for a in compositions(n))
    return total == (-1) ** n
