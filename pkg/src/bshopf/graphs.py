"""Graphs, graphical building sets, nerves of antichains and related predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .core import BuildingSet, SetFamily, _close, bits
from .errors import InputError, guard

GRAPHICAL_LIMIT = 16
BETA_LIMIT = 20
TUTTE_LIMIT = 20
ORIENTATION_LIMIT = 16
NERVE_LIMIT = 20
ACYCLIC_LIMIT = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices ``0..v-1``; edges are sorted pairs ``(u, w)`` with ``u < w``."""

    v: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        es = set()
        for e in self.edges:
            u, w = e
            if u == w:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.v and 0 <= w < self.v):
                raise InputError(f"edge {e} leaves the vertex set 0..{self.v - 1}")
            es.add((min(u, w), max(u, w)))
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> "SimpleGraph":
        edges = [tuple(e) for e in edges]
        keys = [(min(e), max(e)) for e in edges]
        if len(set(keys)) != len(keys):
            raise InputError("multiple edges are not allowed")
        return cls(v, tuple(keys), tuple(labels) if labels is not None else None)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.v
        for u, w in self.edges:
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return tuple(adj)

    def induced(self, mask: int) -> "SimpleGraph":
        pos = {x: i for i, x in enumerate(bits(mask))}
        es = [(pos[u], pos[w]) for u, w in self.edges if u in pos and w in pos]
        return SimpleGraph(len(pos), tuple(es))

    def is_connected_on(self, mask: int) -> bool:
        if mask == 0:
            return False
        seen = mask & -mask
        frontier = seen
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= self.adjacency[x]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    @property
    def is_connected(self) -> bool:
        return self.v == 0 or self.is_connected_on((1 << self.v) - 1)

    def components(self, edge_subset: Iterable[tuple[int, int]] | None = None) -> int:
        """Connected components of the spanning subgraph with the given edges."""
        es = self.edges if edge_subset is None else edge_subset
        parent = list(range(self.v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.v
        for u, w in es:
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
                count -= 1
        return count


def complete_graph(v: int) -> SimpleGraph:
    return SimpleGraph(v, tuple(combinations(range(v), 2)))


def path_graph(v: int) -> SimpleGraph:
    return SimpleGraph(v, tuple((i, i + 1) for i in range(v - 1)))


def cycle_graph(v: int) -> SimpleGraph:
    return SimpleGraph(v, tuple((i, (i + 1) % v) for i in range(v)))


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def all_graphs(v: int) -> Iterable[SimpleGraph]:
    """Every labelled simple graph on ``v`` vertices."""
    pairs = list(combinations(range(v), 2))
    for pick in product((0, 1), repeat=len(pairs)):
        yield SimpleGraph(v, tuple(p for p, x in zip(pairs, pick) if x))


# ---------------------------------------------------------------------------
# building sets from graphs
# ---------------------------------------------------------------------------

def graphical(g: SimpleGraph) -> BuildingSet:
    """Vertex subsets inducing connected subgraphs."""
    guard("vertex count for the graphical building set", g.v, GRAPHICAL_LIMIT)
    members = tuple(m for m in range(1, 1 << g.v) if g.is_connected_on(m))
    return BuildingSet(g.v, members, g.labels)


def beta_n(g: SimpleGraph, n: int) -> BuildingSet:
    """Replace every edge ``uv`` by the generator ``{u, v, e_1, ..., e_(n-2)}``.

    New elements follow the vertices, edge by edge in sorted edge order.
    """
    if n < 2:
        raise InputError("beta_n needs n >= 2")
    rank = g.v + (n - 2) * len(g.edges)
    guard("rank of beta_n", rank, BETA_LIMIT)
    gens = []
    nxt = g.v
    for u, w in g.edges:
        s = (1 << u) | (1 << w)
        for _ in range(n - 2):
            s |= 1 << nxt
            nxt += 1
        gens.append(s)
    labels = None
    if g.labels is not None:
        extra = [f"{g.labels[u]}-{g.labels[w]}#{i}"
                 for u, w in g.edges for i in range(1, n - 1)]
        labels = tuple(g.labels) + tuple(extra)
    return BuildingSet(rank, _close(rank, gens).members, labels)


def beta_generators(g: SimpleGraph, n: int) -> SetFamily:
    """The antichain ``{S_e}`` generating ``beta_n(g)``."""
    rank = g.v + (n - 2) * len(g.edges)
    gens = []
    nxt = g.v
    for u, w in g.edges:
        s = (1 << u) | (1 << w)
        for _ in range(n - 2):
            s |= 1 << nxt
            nxt += 1
        gens.append(s)
    return SetFamily(rank, tuple(gens))


# ---------------------------------------------------------------------------
# Tutte polynomial and orientations
# ---------------------------------------------------------------------------

class BivariatePolynomial:
    """Sparse integer polynomial in x, y keyed by exponent pairs."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __call__(self, x: int, y: int) -> int:
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def items(self) -> list:
        return sorted(self.coeffs.items())

    def __repr__(self) -> str:
        return " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in self.items()) or "0"


def tutte(g: SimpleGraph) -> BivariatePolynomial:
    """Subset expansion sum_S (x-1)^(c(S)-c(E)) (y-1)^(c(S)+|S|-|V|)."""
    guard("edge count for the Tutte polynomial", len(g.edges), TUTTE_LIMIT)
    from math import comb
    ce = g.components()
    powers: dict[tuple[int, int], int] = {}
    for k in range(len(g.edges) + 1):
        for sub in combinations(g.edges, k):
            c = g.components(sub)
            key = (c - ce, c + k - g.v)
            powers[key] = powers.get(key, 0) + 1
    out: dict = {}
    for (r, s), mult in powers.items():
        for i in range(r + 1):
            for j in range(s + 1):
                term = comb(r, i) * comb(s, j) * (-1) ** (r - i + s - j)
                out[(i, j)] = out.get((i, j), 0) + mult * term
    return BivariatePolynomial(out)


def _reaches(adj: list[int], src: int, dst: int) -> bool:
    seen = 1 << src
    frontier = seen
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        nxt &= ~seen
        if nxt >> dst & 1:
            return True
        seen |= nxt
        frontier = nxt
    return False


def orientation_counts(g: SimpleGraph, check: bool = True) -> tuple[int, int]:
    """Counts of acyclic and of totally cyclic orientations, by enumeration.

    With ``check`` set, the counts are compared with chi(beta_2(g), -1) and
    chi(beta_3(g), -1) via the sign rules of the Tutte evaluations.
    """
    guard("edge count for orientation enumeration", len(g.edges), ORIENTATION_LIMIT)
    acyclic = cyclic = 0
    for flip in range(1 << len(g.edges)):
        arcs = [(w, u) if flip >> i & 1 else (u, w) for i, (u, w) in enumerate(g.edges)]
        adj = [0] * g.v
        for a, b in arcs:
            adj[a] |= 1 << b
        if all(_reaches(adj, b, a) for a, b in arcs):
            cyclic += 1
        if not any(_reaches(adj, b, a) for a, b in arcs):
            acyclic += 1
    if check:
        from .chromatic import chi_minus_one_subsets
        from .errors import CrossCheckError
        two = chi_minus_one_subsets(beta_n(g, 2))
        if two != (-1) ** g.v * acyclic:
            raise CrossCheckError(f"chi(beta_2,-1)={two} but {acyclic} acyclic orientations")
        if 2 * len(g.edges) + g.v <= BETA_LIMIT:
            three = chi_minus_one_subsets(beta_n(g, 3))
            sign = (-1) ** (len(g.edges) + g.components())
            if three != sign * cyclic:
                raise CrossCheckError(
                    f"chi(beta_3,-1)={three} but {cyclic} totally cyclic orientations")
    return acyclic, cyclic


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """Nonempty faces (vertex masks) of a complex on vertices ``0..n-1``.

    ``elabels`` optionally maps a face to a positive integer, e.g. the size of
    the common intersection for a nerve.
    """

    n: int
    faces: frozenset[int]
    elabels: dict | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        for f in self.faces:
            if f == 0 or f >> self.n:
                raise InputError(f"bad face {sorted(bits(f))}")
            for x in bits(f):
                if f ^ (1 << x) and (f ^ (1 << x)) not in self.faces:
                    raise InputError("faces are not closed under taking subsets")
        for i in range(self.n):
            if 1 << i not in self.faces:
                raise InputError(f"vertex {i} is not a face")

    @property
    def dimension(self) -> int:
        return max((f.bit_count() for f in self.faces), default=0) - 1

    def one_skeleton(self) -> SimpleGraph:
        return SimpleGraph(self.n, tuple(tuple(bits(f)) for f in self.faces
                                         if f.bit_count() == 2))

    def full_subcomplex(self, mask: int) -> frozenset[int]:
        return frozenset(f for f in self.faces if f & mask == f)


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, frozenset(range(1, 1 << n)))


def clique_complex(g: SimpleGraph) -> SimplicialComplex:
    faces = set()

    def grow(face: int, cand: int):
        faces.add(face)
        for x in bits(cand):
            grow(face | 1 << x, cand & g.adjacency[x] & ~((2 << x) - 1))

    for x in range(g.v):
        grow(1 << x, g.adjacency[x] & ~((2 << x) - 1))
    return SimplicialComplex(g.v, frozenset(faces))


def _intersections(l: SetFamily) -> dict[int, int]:
    sets = l.sets
    out: dict[int, int] = {}

    def grow(face: int, inter: int, start: int):
        out[face] = inter.bit_count()
        for j in range(start, len(sets)):
            nxt = inter & sets[j]
            if nxt:
                grow(face | 1 << j, nxt, j + 1)

    for i, s in enumerate(sets):
        if s:
            grow(1 << i, s, i + 1)
    return out


def nerve(l: SetFamily) -> SimplicialComplex:
    """Complex on the sets of ``l`` whose faces are intersecting subfamilies."""
    guard("antichain size for the nerve", len(l), NERVE_LIMIT)
    if not l.is_antichain():
        raise InputError("the nerve is defined for antichains")
    sizes = _intersections(l)
    return SimplicialComplex(len(l), frozenset(sizes), sizes)


def intersection_graph(l: SetFamily) -> SimpleGraph:
    return SimpleGraph(len(l), tuple(
        (i, j) for i, j in combinations(range(len(l)), 2) if l.sets[i] & l.sets[j]))


def is_odd_collection(l: SetFamily) -> bool:
    return all(v % 2 == 1 for v in _intersections(l).values())


def is_flag(k: SimplicialComplex) -> bool:
    """Every minimal non-face has exactly two vertices."""
    for f in k.faces:
        for x in range(k.n):
            if f >> x & 1:
                continue
            g = f | 1 << x
            if g in k.faces or g.bit_count() < 3:
                continue
            if all((g ^ 1 << y) in k.faces for y in bits(g)):
                return False
    return True


def mcs_ordering(g: SimpleGraph) -> list[int]:
    """Maximum cardinality search; returns vertices in visiting order."""
    weight = [0] * g.v
    done = 0
    order = []
    for _ in range(g.v):
        x = max((u for u in range(g.v) if not done >> u & 1), key=lambda u: (weight[u], -u))
        order.append(x)
        done |= 1 << x
        for y in bits(g.adjacency[x] & ~done):
            weight[y] += 1
    return order


def is_perfect_elimination_ordering(g: SimpleGraph, order: Sequence[int]) -> bool:
    """Check that each vertex's later neighbours form a clique.

    ``order`` lists vertices in elimination order.
    """
    pos = {x: i for i, x in enumerate(order)}
    for x in order:
        later = [y for y in bits(g.adjacency[x]) if pos[y] > pos[x]]
        if not later:
            continue
        parent = min(later, key=lambda y: pos[y])
        need = 0
        for y in later:
            if y != parent:
                need |= 1 << y
        if need & ~g.adjacency[parent]:
            return False
    return True


def is_chordal(g: SimpleGraph) -> bool:
    """The reverse of an MCS order is a perfect elimination order iff chordal."""
    return is_perfect_elimination_ordering(g, mcs_ordering(g)[::-1])


def _is_cycle_on(g: SimpleGraph, mask: int) -> bool:
    for x in bits(mask):
        if (g.adjacency[x] & mask).bit_count() != 2:
            return False
    return g.is_connected_on(mask)


def has_chordless_cycle(g: SimpleGraph, min_length: int = 4) -> bool:
    """Brute-force search for an induced cycle of length >= ``min_length``."""
    return any(_is_cycle_on(g, m) for m in range(1 << g.v) if m.bit_count() >= min_length)


def is_fully_acyclic(k: SimplicialComplex) -> bool:
    """No full subcomplex is a 1-dimensional cycle.

    A full subcomplex on ``I`` (``|I| >= 3``) is such a cycle when its edges
    form one cycle through all of ``I`` and it has no face of size three.
    """
    guard("vertex count for the full-subcomplex search", k.n, ACYCLIC_LIMIT)
    skel = k.one_skeleton()
    for m in range(1 << k.n):
        if m.bit_count() < 3 or not _is_cycle_on(skel, m):
            continue
        if m.bit_count() == 3 and m in k.faces:
            continue
        return False
    return True


@dataclass(frozen=True)
class IntersectionPoset:
    """Index sets ``I`` with a nonempty common intersection, and its size."""

    m: int
    sizes: dict = field(hash=False)

    @property
    def elements(self) -> list[int]:
        return sorted(self.sizes, key=lambda x: (x.bit_count(), x))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntersectionPoset) and self.m == other.m \
            and set(self.sizes) == set(other.sizes)

    def same_parity(self, other: "IntersectionPoset") -> bool:
        return self == other and all(
            self.sizes[i] % 2 == other.sizes[i] % 2 for i in self.sizes)


def intersection_poset(l: SetFamily) -> IntersectionPoset:
    guard("collection size for the intersection poset", len(l), 16)
    return IntersectionPoset(len(l), _intersections(l))


# Stanley's pair of 5-vertex graphs with equal chromatic symmetric functions.
STANLEY_PAIR = (
    SimpleGraph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4))),
    SimpleGraph(5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4))),
)
