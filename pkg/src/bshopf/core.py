"""Building sets and their Hopf-algebraic operations.

Ground-set elements are dense indices ``0..n-1`` and every subset is an
``n``-bit integer mask.  A :class:`BuildingSet` stores its members sorted by
``(size, mask)``; all operations are pure and return new objects.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InputError, guard

MAX_GROUND = 64
COPRODUCT_LIMIT = 20
ANTIPODE_LIMIT = 8
CANONICAL_LIMIT = 10


# ---------------------------------------------------------------------------
# bit helpers
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def as_mask(s: int | Iterable[int]) -> int:
    return s if isinstance(s, int) else to_mask(s)


def popcount(mask: int) -> int:
    return mask.bit_count()


def pack(mask: int, support: int) -> int:
    """Re-index ``mask`` (a subset of ``support``) onto ``0..|support|-1``."""
    out = 0
    pos = 0
    for i in bits(support):
        if mask >> i & 1:
            out |= 1 << pos
        pos += 1
    return out


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including ``mask`` and 0, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _member_key(m: int) -> tuple[int, int]:
    return (m.bit_count(), m)


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetFamily:
    """An arbitrary family of distinct subsets of ``0..n-1`` (as masks)."""

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        seen = []
        for s in self.sets:
            if s not in seen:
                seen.append(s)
        object.__setattr__(self, "sets", tuple(seen))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[int | Iterable[int]]) -> "SetFamily":
        masks = [as_mask(s) for s in sets]
        for m in masks:
            if m >> n:
                raise InputError(f"set {sorted(bits(m))} has an index outside 0..{n - 1}")
        return cls(n, tuple(masks))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def is_antichain(self) -> bool:
        return not any(
            a != b and a & b == a for a in self.sets for b in self.sets
        )

    def as_lists(self) -> list[list[int]]:
        return [list(bits(s)) for s in self.sets]


@dataclass(frozen=True)
class BuildingSet:
    """A building set on the ground set ``0..n-1``.

    ``members`` holds every member (singletons included) as a bitmask.  Use
    :func:`closure` or :meth:`from_members` to build one from user data; the
    raw constructor trusts its arguments.
    """

    n: int
    members: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "members", tuple(sorted(set(self.members), key=_member_key))
        )

    @classmethod
    def from_members(cls, n: int, members: Iterable[int | Iterable[int]],
                     labels: Sequence[str] | None = None) -> "BuildingSet":
        ms = [as_mask(s) for s in members]
        check_building_set(n, ms)
        return cls(n, tuple(ms), tuple(labels) if labels is not None else None)

    @property
    def rank(self) -> int:
        return self.n

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, s) -> bool:
        return as_mask(s) in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_discrete(self) -> bool:
        return len(self.members) == self.n

    @property
    def is_connected(self) -> bool:
        return self.n >= 1 and self.ground in self.member_set

    @cached_property
    def _generators(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return _generators(self)

    @property
    def c_min(self) -> tuple[int, ...]:
        """Inclusion-minimal members of the generating collection."""
        return self._generators[1]

    @cached_property
    def discrete_table(self) -> list[bool]:
        """``table[J]`` is True iff the restriction to ``J`` is discrete.

        A restriction is discrete exactly when it contains no minimal
        generator, so the table is the complement of an up-closure.
        """
        guard("rank for the restriction table", self.n, 22)
        size = 1 << self.n
        blocked = bytearray(size)
        for c in self.c_min:
            blocked[c] = 1
        for i in range(self.n):
            bit = 1 << i
            for m in range(size):
                if m & bit and blocked[m ^ bit]:
                    blocked[m] = 1
        return [not b for b in blocked]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def member_lists(self) -> list[list[int]]:
        return [list(bits(m)) for m in self.members]

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, bits(m))) + "}"
                         for m in self.members if m.bit_count() > 1)
        return f"BuildingSet(n={self.n}, [{body}])"


def check_building_set(n: int, members: Iterable[int]) -> None:
    """Raise :class:`InputError` unless ``members`` satisfy (B1) and (B2)."""
    if not 0 <= n <= MAX_GROUND:
        raise InputError(f"ground set size {n} outside 0..{MAX_GROUND}")
    ms = set(members)
    for m in ms:
        if m == 0:
            raise InputError("building sets have no empty member")
        if m >> n:
            raise InputError(f"member {sorted(bits(m))} leaves the ground set")
    for i in range(n):
        if 1 << i not in ms:
            raise InputError(f"singleton {{{i}}} is missing")
    for a in ms:
        for b in ms:
            if a & b and (a | b) not in ms:
                raise InputError(
                    f"union of overlapping members {sorted(bits(a))}, "
                    f"{sorted(bits(b))} is missing")


def empty() -> BuildingSet:
    return BuildingSet(0, ())


def discrete(n: int) -> BuildingSet:
    """The discrete building set D_n."""
    return BuildingSet(n, tuple(1 << i for i in range(n)))


def full(n: int) -> BuildingSet:
    """All nonempty subsets of an n-set."""
    guard("rank of the full building set", n, 20)
    return BuildingSet(n, tuple(range(1, 1 << n)))


def dbar(n: int) -> BuildingSet:
    """D_n with the whole ground set added (the minimal connected one)."""
    b = discrete(n)
    return BuildingSet(n, b.members + ((1 << n) - 1,)) if n else b


# ---------------------------------------------------------------------------
# closure, restriction, product
# ---------------------------------------------------------------------------

def _close(n: int, gens: Iterable[int]) -> BuildingSet:
    base = list(dict.fromkeys(g for g in gens if g.bit_count() > 1))
    found = set(base)
    frontier = list(base)
    while frontier:
        nxt = []
        for s2 in frontier:
            for s1 in base:
                if s1 & s2:
                    u = s1 | s2
                    if u not in found:
                        found.add(u)
                        nxt.append(u)
        frontier = nxt
    found.update(1 << i for i in range(n))
    return BuildingSet(n, tuple(found))


def closure(c: SetFamily, labels: Sequence[str] | None = None) -> BuildingSet:
    """The least building set containing every set of ``c``."""
    guard("ground set size", c.n, MAX_GROUND)
    for s in c.sets:
        if s >> c.n:
            raise InputError(f"set {sorted(bits(s))} leaves the ground set 0..{c.n - 1}")
        if s.bit_count() < 2:
            raise InputError("generator must have >= 2 elements")
    b = _close(c.n, c.sets)
    if labels is not None:
        b = BuildingSet(b.n, b.members, tuple(labels))
    return b


def closure_of(n: int, sets: Iterable[Iterable[int]]) -> BuildingSet:
    """Shorthand for ``closure(SetFamily.from_sets(n, sets))``."""
    return closure(SetFamily.from_sets(n, sets))


def restriction(b: BuildingSet, i: int | Iterable[int]) -> BuildingSet:
    """``b|_I``, re-indexed onto ``0..|I|-1`` in increasing order of ``I``."""
    mask = as_mask(i)
    if mask >> b.n:
        raise InputError(f"restriction set leaves the ground set of rank {b.n}")
    ms = tuple(pack(m, mask) for m in b.members if m & mask == m)
    labels = None
    if b.labels is not None:
        labels = tuple(b.labels[j] for j in bits(mask))
    return BuildingSet(mask.bit_count(), ms, labels)


def product(b1: BuildingSet, b2: BuildingSet) -> BuildingSet:
    """Disjoint union; ``b2`` is shifted past the ground set of ``b1``."""
    labels = None
    if b1.labels is not None and b2.labels is not None:
        labels = b1.labels + b2.labels
    return BuildingSet(b1.n + b2.n,
                       b1.members + tuple(m << b1.n for m in b2.members),
                       labels)


def coproduct_terms(b: BuildingSet) -> list[tuple[BuildingSet, BuildingSet]]:
    """Pairs ``(b|_I, b|_{I^c})`` for ``I`` running over masks ``0..2^n-1``."""
    guard("rank for the coproduct", b.n, COPRODUCT_LIMIT)
    g = b.ground
    return [(restriction(b, i), restriction(b, g ^ i)) for i in range(1 << b.n)]


def connected_components(b: BuildingSet) -> list[BuildingSet]:
    """Restrictions to the inclusion-maximal members, ordered by least element."""
    maximal = [m for m in b.members
               if not any(o != m and o & m == m for o in b.members)]
    maximal.sort(key=lambda m: (m & -m))
    return [restriction(b, m) for m in maximal]


def component_masks(b: BuildingSet) -> list[int]:
    maximal = [m for m in b.members
               if not any(o != m and o & m == m for o in b.members)]
    return sorted(maximal, key=lambda m: (m & -m))


# ---------------------------------------------------------------------------
# generators, deletion, contraction
# ---------------------------------------------------------------------------

def _generators(b: BuildingSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    big = [m for m in b.members if m.bit_count() > 1]
    gens = []
    for s in big:
        proper = [t for t in big if t != s and t & s == t]
        maximal = [t for t in proper
                   if not any(u != t and u & t == t for u in proper)]
        decomposable = any(
            t & u for t, u in itertools.combinations(maximal, 2)
        )
        if not decomposable:
            gens.append(s)
    gmin = [s for s in gens if not any(t != s and t & s == t for t in gens)]
    return tuple(gens), tuple(gmin)


def minimal_generators(b: BuildingSet) -> tuple[SetFamily, SetFamily]:
    """The generating collection ``C`` and its minimal elements ``C_min``.

    ``C`` consists of the members (size >= 2) that are not the union of two
    overlapping proper members.  If such a decomposition exists then two
    distinct maximal proper submembers overlap, so only those are tested.
    """
    gens, gmin = b._generators
    return SetFamily(b.n, gens), SetFamily(b.n, gmin)


def minimalization(b: BuildingSet) -> BuildingSet:
    return BuildingSet(b.n, _close(b.n, b.c_min).members, b.labels)


def _require_min_generator(b: BuildingSet, s: int) -> None:
    if s not in b.c_min:
        raise InputError(f"{sorted(bits(s))} is not a minimal generator")


def deletion(b: BuildingSet, s: int | Iterable[int]) -> BuildingSet:
    """Closure of the generating collection with ``s`` removed."""
    s = as_mask(s)
    _require_min_generator(b, s)
    gens = [g for g in b._generators[0] if g != s]
    return BuildingSet(b.n, _close(b.n, gens).members, b.labels)


def contraction_index_map(n: int, s: int) -> list[int]:
    """New index of every old element when ``s`` is merged into ``min(s)``."""
    low = s & -s
    out = []
    nxt = 0
    merged = None
    for i in range(n):
        bit = 1 << i
        if bit & s and bit != low:
            out.append(-1)
            continue
        if bit == low:
            merged = nxt
        out.append(nxt)
        nxt += 1
    return [merged if v == -1 else v for v in out]


def contraction(b: BuildingSet, s: int | Iterable[int]) -> BuildingSet:
    """Contract the minimal generator ``s`` to one point.

    The merged point takes the smallest index of ``s``; other indices are
    re-packed (see :func:`contraction_index_map`).  Images ``A/S`` that become
    singletons are dropped before taking the closure.
    """
    s = as_mask(s)
    _require_min_generator(b, s)
    imap = contraction_index_map(b.n, s)
    n2 = b.n - s.bit_count() + 1
    gens = []
    for a in b._generators[0]:
        gens.append(to_mask(imap[i] for i in bits(a)))
    labels = None
    if b.labels is not None:
        labels = [""] * n2
        for i, j in enumerate(imap):
            labels[j] = b.labels[i] if not (s >> i & 1) else \
                "/".join(b.labels[k] for k in bits(s))
        labels = tuple(labels)
    return BuildingSet(n2, _close(n2, gens).members, labels)


# ---------------------------------------------------------------------------
# equivalence and canonical forms
# ---------------------------------------------------------------------------

def _refined_classes(n: int, members: tuple[int, ...]) -> list[list[int]]:
    colour = []
    for i in range(n):
        sig = Counter(m.bit_count() for m in members if m >> i & 1)
        colour.append(tuple(sorted(sig.items())))
    for _ in range(2):
        new = []
        for i in range(n):
            around = sorted(
                tuple(sorted(colour[j] for j in bits(m)))
                for m in members if m >> i & 1
            )
            new.append((colour[i], tuple(around)))
        ranks = {c: r for r, c in enumerate(sorted(set(new)))}
        colour = [ranks[c] for c in new]
    groups: dict = {}
    for i in range(n):
        groups.setdefault(colour[i], []).append(i)
    return [groups[k] for k in sorted(groups)]


@lru_cache(maxsize=200_000)
def _canonical_connected(n: int, members: tuple[int, ...]) -> tuple:
    if n <= 1:
        return (n, members)
    classes = _refined_classes(n, members)
    elems = [list(bits(m)) for m in members]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        pos = [0] * n
        p = 0
        for block in perms:
            for e in block:
                pos[e] = p
                p += 1
        enc = sorted(sum(1 << pos[e] for e in es) for es in elems)
        t = tuple(enc)
        if best is None or t < best:
            best = t
    return (n, best)


def canonical_form(b: BuildingSet) -> tuple:
    """Sorted tuple of canonical encodings of the connected components.

    Two building sets are equivalent iff their canonical forms agree.  The
    encoding of a component is the lexicographically least sorted member list
    over all relabelings that respect an isomorphism-invariant colouring.
    """
    out = []
    for comp in component_masks(b):
        guard("component rank for canonical form", comp.bit_count(), CANONICAL_LIMIT)
        r = restriction(b, comp)
        out.append(_canonical_connected(r.n, r.members))
    return tuple(sorted(out))


def _profile(b: BuildingSet) -> tuple:
    return (b.n, len(b.members), tuple(sorted(m.bit_count() for m in b.members)))


def equivalent(b1: BuildingSet, b2: BuildingSet) -> bool:
    """True iff a bijection of ground sets maps members onto members."""
    if _profile(b1) != _profile(b2):
        return False
    guard("rank for equivalence", b1.n, CANONICAL_LIMIT)
    return canonical_form(b1) == canonical_form(b2)


def from_canonical(key: tuple) -> BuildingSet:
    """Rebuild a representative building set from a canonical form."""
    b = empty()
    for n, members in key:
        b = product(b, BuildingSet(n, members))
    return b


# ---------------------------------------------------------------------------
# formal sums, coproduct and antipode
# ---------------------------------------------------------------------------

class FormalSum:
    """Integer combination of equivalence classes of building sets.

    Keys are canonical forms (see :func:`canonical_form`); multiplication is
    the disjoint-union product, which on keys is multiset union.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, b: BuildingSet, coeff: int = 1) -> "FormalSum":
        return cls({canonical_form(b): coeff})

    @classmethod
    def unit(cls) -> "FormalSum":
        return cls({(): 1})

    def __add__(self, other: "FormalSum") -> "FormalSum":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return FormalSum(t)

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalSum({k: v * other for k, v in self.terms.items()})
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(sorted(k1 + k2))
                t[k] = t.get(k, 0) + v1 * v2
        return FormalSum(t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def evaluate(self, character) -> int:
        """Apply a function of building sets linearly."""
        return sum(v * character(from_canonical(k)) for k, v in self.terms.items())

    def __repr__(self) -> str:
        return f"FormalSum({len(self.terms)} terms)"


def tensor_coproduct(b: BuildingSet) -> Counter:
    """Delta(b) as a Counter keyed by pairs of canonical forms."""
    out: Counter = Counter()
    for left, right in coproduct_terms(b):
        out[(canonical_form(left), canonical_form(right))] += 1
    return out


def antipode(b: BuildingSet) -> FormalSum:
    """Signed sum over ordered set partitions of products of restrictions.

    Grouping by the first block gives a memoised recursion over the masks of
    the not-yet-covered elements.
    """
    guard("rank for the antipode", b.n, ANTIPODE_LIMIT)
    if b.n == 0:
        return FormalSum.unit()
    keys = {}

    def key(mask: int) -> tuple:
        if mask not in keys:
            keys[mask] = canonical_form(restriction(b, mask))
        return keys[mask]

    memo: dict[int, Counter] = {0: Counter({(): 1})}

    def expand(mask: int) -> Counter:
        if mask in memo:
            return memo[mask]
        acc: Counter = Counter()
        for first in submasks(mask):
            if first == 0:
                continue
            k1 = key(first)
            for k2, v in expand(mask ^ first).items():
                acc[tuple(sorted(k1 + k2))] -= v
        memo[mask] = acc
        return acc

    return FormalSum(dict(expand(b.ground)))
