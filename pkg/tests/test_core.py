from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from bshopf.core import (BuildingSet, FormalSum, SetFamily, antipode,
                         canonical_form, closure, closure_of, connected_components,
                         contraction, coproduct_terms, dbar, deletion, discrete,
                         empty, equivalent, from_canonical, full, minimal_generators,
                         minimalization, product, restriction, tensor_coproduct,
                         to_mask)
from bshopf.errors import GuardError, InputError
from bshopf.graphs import (SimpleGraph, complete_graph, graphical, path_graph,
                           star_graph)

from conftest import antichains, building_sets, graphs
from oracles import (brute_antipode, brute_equivalent, is_building_set,
                     member_sets, naive_closure)


def masks(*sets):
    return {to_mask(s) for s in sets}


# closure ---------------------------------------------------------------

def test_closure_forces_union():
    b = closure_of(3, [[0, 1], [1, 2]])
    assert to_mask([0, 1, 2]) in b.member_set


def test_closure_of_nothing_is_discrete():
    assert closure_of(2, []) == discrete(2)
    assert discrete(2).members == (1, 2)


def test_closure_path_on_four():
    b = closure_of(4, [[0, 1], [1, 2], [2, 3]])
    assert len(b) == 10
    assert b.member_set == masks([0], [1], [2], [3], [0, 1], [1, 2], [2, 3],
                                 [0, 1, 2], [1, 2, 3], [0, 1, 2, 3])


def test_closure_rejects_small_generator():
    with pytest.raises(InputError, match="generator must have"):
        closure(SetFamily.from_sets(2, [[0]]))


def test_closure_rejects_out_of_range():
    with pytest.raises(InputError):
        SetFamily.from_sets(2, [[0, 2]])


def test_from_members_validates():
    with pytest.raises(InputError):
        BuildingSet.from_members(3, [[0], [1], [2], [0, 1], [1, 2]])
    with pytest.raises(InputError):
        BuildingSet.from_members(2, [[0], [0, 1]])
    BuildingSet.from_members(3, [[0], [1], [2], [0, 1], [1, 2], [0, 1, 2]])


@given(antichains(max_n=7))
def test_closure_matches_naive_fixed_point(l):
    b = closure(l)
    expect = naive_closure(l.n, [[i for i in range(l.n) if s >> i & 1] for s in l])
    assert member_sets(b) == expect
    assert is_building_set(b.n, member_sets(b))


@given(building_sets(max_n=7))
def test_closure_idempotent(b):
    assert closure(SetFamily(b.n, b.members[b.n:])) == b
    gens, _ = minimal_generators(b)
    assert closure(gens) == b


def test_closure_axioms_exhaustive_pairs_rank_12():
    b = closure_of(12, [[0, 1, 2], [2, 3], [3, 4, 5], [6, 7], [7, 8, 9], [9, 10, 11], [0, 11]])
    fam = set(b.members)
    for x in fam:
        for y in fam:
            if x & y:
                assert x | y in fam


# restriction, product, components ----------------------------------------

def test_restriction_examples():
    assert restriction(full(2), 0) == empty()
    assert equivalent(restriction(graphical(complete_graph(3)), [0, 1]),
                      graphical(complete_graph(2)))
    assert restriction(graphical(path_graph(3)), [0, 2]) == discrete(2)


@settings(max_examples=40)
@given(graphs(max_v=6), st.data())
def test_restriction_of_graphical_is_induced(g, data):
    mask = data.draw(st.integers(0, (1 << g.v) - 1))
    assert restriction(graphical(g), mask) == graphical(g.induced(mask))


def test_product_examples():
    assert product(discrete(1), discrete(1)) == discrete(2)
    b = graphical(complete_graph(3))
    assert product(b, empty()) == b
    two = SimpleGraph(4, ((0, 1), (2, 3)))
    assert product(graphical(complete_graph(2)), graphical(complete_graph(2))) == graphical(two)


def test_connected_components_examples():
    assert [c.n for c in connected_components(discrete(4))] == [1, 1, 1, 1]
    assert len(connected_components(dbar(3))) == 1
    b = closure_of(5, [[0, 1], [2, 3, 4]])
    assert sorted(c.n for c in connected_components(b)) == [2, 3]


# coproduct and antipode ---------------------------------------------------

def test_coproduct_small():
    terms = coproduct_terms(discrete(1))
    assert terms == [(empty(), discrete(1)), (discrete(1), empty())]
    assert len(coproduct_terms(discrete(2))) == 4
    pairs = coproduct_terms(graphical(complete_graph(2)))
    assert pairs[1] == (discrete(1), discrete(1))


def test_antipode_examples():
    assert antipode(empty()) == FormalSum.unit()
    assert antipode(discrete(1)) == -FormalSum.of(discrete(1))
    # -D_2 + 2 D_1 D_1 collects to +D_2
    assert antipode(discrete(2)) == FormalSum.of(discrete(2))
    assert FormalSum.of(discrete(1)) * FormalSum.of(discrete(1)) == FormalSum.of(discrete(2))


@settings(max_examples=30)
@given(building_sets(max_n=4))
def test_antipode_matches_ordered_partition_sum(b):
    assert antipode(b) == brute_antipode(b)


def _apply_left(delta: Counter) -> FormalSum:
    """Sum of S(left) * right over the terms of a coproduct."""
    out = FormalSum()
    for (k1, k2), c in delta.items():
        out = out + antipode(from_canonical(k1)) * FormalSum({k2: 1}) * c
    return out


def coassociativity_holds(b: BuildingSet) -> bool:
    lhs, rhs = Counter(), Counter()
    for left, right in coproduct_terms(b):
        kr = canonical_form(right)
        for l1, l2 in coproduct_terms(left):
            lhs[(canonical_form(l1), canonical_form(l2), kr)] += 1
        kl = canonical_form(left)
        for r1, r2 in coproduct_terms(right):
            rhs[(kl, canonical_form(r1), canonical_form(r2))] += 1
    return lhs == rhs


def antipode_law_holds(b: BuildingSet) -> bool:
    expect = FormalSum.unit() if b.n == 0 else FormalSum()
    return _apply_left(tensor_coproduct(b)) == expect


@settings(max_examples=40)
@given(building_sets(max_n=5))
def test_coassociativity(b):
    assert coassociativity_holds(b)


@settings(max_examples=25)
@given(building_sets(max_n=5))
def test_antipode_law(b):
    assert antipode_law_holds(b)


@settings(max_examples=25)
@given(building_sets(max_n=3), building_sets(max_n=2))
def test_coproduct_multiplicative(b1, b2):
    lhs = Counter()
    for left, right in coproduct_terms(product(b1, b2)):
        lhs[(canonical_form(left), canonical_form(right))] += 1
    rhs = Counter()
    for (a1, a2), c in tensor_coproduct(b1).items():
        for (d1, d2), e in tensor_coproduct(b2).items():
            rhs[(tuple(sorted(a1 + d1)), tuple(sorted(a2 + d2)))] += c * e
    assert lhs == rhs


def test_antipode_guard():
    with pytest.raises(GuardError, match="limit 8"):
        antipode(discrete(9))


# generators, deletion, contraction ---------------------------------------

def test_minimal_generators_examples():
    gens, gmin = minimal_generators(graphical(complete_graph(3)))
    assert set(gens) == masks([0, 1], [0, 2], [1, 2]) == set(gmin)
    assert len(minimal_generators(discrete(4))[0]) == 0
    # every subset of {0,1,2} is a member; the 2-subsets generate it
    p = full(3)
    assert set(minimal_generators(p)[0]) == masks([0, 1], [0, 2], [1, 2])


def test_generating_collection_may_exceed_minimal():
    b = closure_of(3, [[0, 1], [0, 1, 2]])
    gens, gmin = minimal_generators(b)
    assert set(gens) == masks([0, 1], [0, 1, 2])
    assert set(gmin) == masks([0, 1])


@given(building_sets(max_n=6))
def test_minimalization_invariants(b):
    gens, gmin = minimal_generators(b)
    m = minimalization(b)
    assert m.member_set <= b.member_set
    assert set(minimal_generators(m)[0]) == set(gmin)
    assert closure(gens) == b


@given(building_sets(max_n=6))
def test_generating_collection_is_exactly_indecomposable(b):
    gens, _ = minimal_generators(b)
    for s in b.members:
        if s.bit_count() < 2:
            continue
        decomposable = any(t | u == s and t & u and t != s and u != s
                           for t in b.members for u in b.members)
        assert (s in gens.sets) == (not decomposable)


def test_deletion_examples():
    k3 = graphical(complete_graph(3))
    d = deletion(k3, [0, 1])
    assert equivalent(d, graphical(path_graph(3)))
    assert d == graphical(SimpleGraph(3, ((0, 2), (1, 2))))
    assert deletion(dbar(3), [0, 1, 2]) == discrete(3)
    assert deletion(closure_of(4, [[0, 1], [2, 3]]), [0, 1]) == closure_of(4, [[2, 3]])


def test_deletion_needs_minimal_generator():
    with pytest.raises(InputError):
        deletion(graphical(complete_graph(3)), [0, 1, 2])


def test_contraction_examples():
    k3 = graphical(complete_graph(3))
    assert contraction(k3, [0, 1]) == graphical(complete_graph(2))
    assert contraction(dbar(3), [0, 1, 2]) == discrete(1)
    b = closure_of(5, [[0, 1, 2], [2, 3, 4]])
    assert contraction(b, [0, 1, 2]) == closure_of(3, [[0, 1, 2]])


# equivalence ------------------------------------------------------------

def test_equivalence_examples():
    p1 = graphical(path_graph(3))
    p2 = graphical(SimpleGraph(3, ((0, 1), (0, 2))))
    assert equivalent(p1, p2)
    assert not equivalent(discrete(2), graphical(complete_graph(2)))
    assert not equivalent(graphical(star_graph(3)), graphical(path_graph(4)))


@settings(max_examples=80)
@given(building_sets(max_n=6), st.data())
def test_equivalence_under_relabeling(b, data):
    perm = data.draw(st.permutations(range(b.n)))
    moved = BuildingSet(b.n, tuple(to_mask(perm[i] for i in s) for s in b.member_lists()))
    assert equivalent(b, moved)
    assert canonical_form(b) == canonical_form(moved)


@settings(max_examples=80)
@given(building_sets(min_n=1, max_n=7), building_sets(min_n=1, max_n=7))
def test_equivalence_matches_brute_force(b1, b2):
    if b1.n != b2.n:
        b2 = closure(SetFamily(b1.n, tuple(s for s in b2.members if s >> b1.n == 0
                                           and s.bit_count() > 1)))
    assert equivalent(b1, b2) == brute_equivalent(b1, b2)


def test_equivalence_exhaustive_rank_4():
    from bshopf.antichains import all_antichains
    sets = [closure(l) for l in all_antichains(4)]
    for b1 in sets[::7]:
        for b2 in sets[::5]:
            assert equivalent(b1, b2) == brute_equivalent(b1, b2)


@given(building_sets(max_n=6))
def test_from_canonical_round_trip(b):
    assert equivalent(from_canonical(canonical_form(b)), b)
