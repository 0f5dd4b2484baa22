"""Face poset structure: grading, ideals, Eulerian-ness, facets."""

from itertools import combinations
from math import comb

import pytest

from ampliface.matroid import enumerate_positroids
from ampliface.posets import (
    Poset,
    ZERO_HAT,
    build_face_poset,
    build_q_poset,
    closure_poset_check,
    corank_gf_closed,
    corank_gf_from_poset,
    facet_hyperplane_assignment,
    facet_indices,
    flip_certificate,
    flip_involution_check,
    is_eulerian,
    is_thin,
    mobius_eulerian_check,
    stratum_in_facet,
    upper_ideal_check,
)
from ampliface.rank2 import canonicalize, from_matroid


def boolean_lattice(n):
    elems = list(range(1 << n))
    return Poset.from_leq(elems, lambda a, b: a & ~b == 0,
                          ranks=[e.bit_count() for e in elems])


def test_q_poset_counts_match_necklace_enumeration():
    for n in (4, 5, 6):
        Q = build_q_poset(n)
        via_necklaces = {from_matroid(P) for P in enumerate_positroids(n, 2)}
        assert set(Q.elements) == via_necklaces


def test_q_poset_top_is_uniform():
    Q = build_q_poset(4)
    tops = Q.maximal_indices()
    assert len(tops) == 1
    assert Q.elements[tops[0]] == canonicalize(4, [], [])


def test_q_poset_respects_containment_example():
    Q = build_q_poset(5)
    # loop at 2 with 4 ~ 5 ~ 1 parallel sits below the top cell
    small = canonicalize(5, [2], [(4, 1)])
    top = canonicalize(5, [], [])
    assert Q.leq(small, top)
    assert not Q.leq(top, small)
    # envelope relations are containments: the interval [1,4] cell with
    # interior loop 2 is also below the loopless [1,4] cell
    mid = canonicalize(5, [], [(1, 4)])
    deep = canonicalize(5, [2], [(1, 4)])
    assert Q.leq(deep, mid)


def test_face_poset_minimal_elements():
    for n, k in [(4, 2), (5, 2), (6, 3)]:
        P = build_face_poset(n, k)
        mins = [P.elements[i] for i in P.minimal_indices()]
        assert len(mins) == comb(n, k)
        assert all(len(N.loops_set()) == k and not N.intervals for N in mins)
        assert all(P.ranks[P.index[N]] == 0 for N in mins)


def test_face_poset_graded_height():
    for n, k in [(5, 2), (6, 2), (6, 3)]:
        P = build_face_poset(n, k)
        assert P.is_graded_by_ranks()
        assert max(P.ranks) == 2 * k and min(P.ranks) == 0
        tops = P.maximal_indices()
        assert len(tops) == 1 and P.ranks[tops[0]] == 2 * k


def test_upper_ideal():
    for n, k in [(5, 2), (6, 2), (6, 3)]:
        assert upper_ideal_check(n, k)


def test_face_poset_covers_are_q_covers():
    # intervals and covers of the face poset agree with the ambient poset
    for n, k in [(5, 2), (5, 3), (6, 2)]:
        Q = build_q_poset(n)
        P = build_face_poset(n, k)
        in_p = {N for N in P.elements}
        p_covers = {(P.elements[i], P.elements[j]) for i, j in P.covers()}
        q_covers = {(Q.elements[i], Q.elements[j]) for i, j in Q.covers()
                    if Q.elements[i] in in_p and Q.elements[j] in in_p}
        assert p_covers == q_covers


def test_corank_gf():
    assert corank_gf_closed(5, 2) == [1, 5, 15, 20, 10]
    n = 7
    assert corank_gf_closed(n, 1) == [1, n, n]
    for n, k in [(5, 2), (6, 2), (6, 3), (7, 2)]:
        got = corank_gf_from_poset(build_face_poset(n, k))
        assert got == corank_gf_closed(n, k)
        assert got[0] == 1
    # the k = 2 coefficient vector in closed form
    for n in (4, 5, 6, 7, 8):
        assert corank_gf_closed(n, 2) == [
            1, n, n + comb(n, 2), n * (n - 1), comb(n, 2)]


def test_eulerian_boolean_lattice():
    B = boolean_lattice(4)
    assert is_eulerian(B) == (True, None)
    assert mobius_eulerian_check(B) == (True, None)


def test_eulerian_fails_on_three_chain():
    chain = Poset.from_leq([0, 1, 2], lambda a, b: a <= b, ranks=[0, 1, 2])
    flag, witness = is_eulerian(chain)
    assert not flag and witness == (0, 2)


def test_eulerian_face_posets_small():
    for n, k in [(4, 2), (5, 2), (5, 3), (6, 2)]:
        hp = build_face_poset(n, k).adjoin_min()
        assert is_eulerian(hp) == (True, None)
        assert mobius_eulerian_check(hp) == (True, None)


def test_thin():
    # face lattice of a square: 0hat, 4 vertices, 4 edges, top
    verts = ["v1", "v2", "v3", "v4"]
    edges = ["e12", "e23", "e34", "e41"]
    elems = ["bot"] + verts + edges + ["top"]

    def leq(a, b):
        if a == b or a == "bot" or b == "top":
            return True
        if a in verts and b in edges:
            return a[1] in b[1:]
        return False

    ranks = [0] + [1] * 4 + [2] * 4 + [3]
    square = Poset.from_leq(elems, leq, ranks)
    assert is_thin(square) == (True, None)

    # three atoms below one rank-2 element: not thin
    atoms = ["a", "b", "c"]
    fan = Poset.from_leq(["bot"] + atoms + ["top"],
                         lambda a, b: a == b or a == "bot" or b == "top",
                         ranks=[0, 1, 1, 1, 2])
    flag, witness = is_thin(fan)
    assert not flag and witness == ("bot", "top")

    for n, k in [(5, 2), (6, 2), (6, 3)]:
        assert is_thin(build_face_poset(n, k).adjoin_min()) == (True, None)


def test_flip_rigid_element_examples():
    # loopless single interval: rigid loop set is the interval minus its
    # left endpoint
    rec = flip_involution_check(canonicalize(5, [], [(1, 3)]), 2)
    assert rec["balanced"]
    assert rec["rigid"] == canonicalize(5, [2, 3], [])

    # the top element's ideal is the whole poset; rigid element is the top
    top = canonicalize(5, [], [])
    rec = flip_involution_check(top, 2)
    assert rec["balanced"] and rec["rigid"] == top
    P = build_face_poset(5, 2)
    assert rec["ideal_size"] == len(P)


def test_flip_requires_loopless():
    with pytest.raises(ValueError):
        flip_involution_check(canonicalize(6, [1], [(2, 4)]), 3)


def test_flip_certificate_with_loops():
    assert flip_certificate(canonicalize(6, [1, 2], [(5, 6)]), 3)["balanced"]
    assert flip_certificate(canonicalize(6, [1, 2, 3], []), 3)["balanced"]


def test_flip_agrees_with_interval_balance():
    for n, k in [(5, 2), (6, 2)]:
        P = build_face_poset(n, k)
        hp = P.adjoin_min()
        z = hp.index[ZERO_HAT]
        for N in P.elements:
            rec = flip_certificate(N, k)
            j = hp.index[N]
            iv = hp.interval_mask(z, j)
            balance = 0
            while iv:
                low = iv & -iv
                iv ^= low
                balance += 1 if hp.ranks[low.bit_length() - 1] % 2 == 0 else -1
            assert rec["balanced"] == (balance == 0)
            assert rec["balanced"]


def test_closure_poset_check():
    assert closure_poset_check(5, 2)
    assert closure_poset_check(6, 2)


def test_facet_assignment_worked_example():
    N = canonicalize(6, [1, 2], [(5, 6)])
    c1 = canonicalize(6, [1, 2, 5], [])
    c2 = canonicalize(6, [1, 2, 6], [])
    # the two cocovers of N
    P = build_face_poset(6, 3)
    i = P.index[N]
    covers_of_n = [P.elements[j] for j, t in P.covers() if t == i]
    assert set(covers_of_n) == {c1, c2}
    assert facet_indices(N, c1, 3) == [4, 5]
    assert facet_indices(N, c2, 3) == [6]
    assert facet_hyperplane_assignment(N, c1, 3) == 4
    # the third hyperplane contains neither stratum
    assert 3 not in facet_indices(N, c1, 3)
    assert not stratum_in_facet(N, c1, 3)
    assert not stratum_in_facet(N, c2, 3)


def test_facet_assignment_rejects_non_cocover():
    N = canonicalize(6, [], [])
    deep = canonicalize(6, [1, 2], [])
    with pytest.raises(ValueError):
        facet_hyperplane_assignment(N, deep, 2)


def test_top_facet_contains_both_vertex_strata():
    # hyperplane 1 of the full poset's top contains the strata that drop
    # either endpoint of the first necklace entry
    for n in (4, 5, 6):
        top = canonicalize(n, [], [])
        v1 = canonicalize(n, [1], [])
        v2 = canonicalize(n, [2], [])
        assert stratum_in_facet(top, v1, 1)
        assert stratum_in_facet(top, v2, 1)
        assert not stratum_in_facet(top, canonicalize(n, [3], []), 1)


def test_facets_certify_gale_increase():
    P = build_face_poset(6, 2)
    for i, j in P.covers():
        lo, hi = P.elements[i], P.elements[j]
        a = facet_hyperplane_assignment(hi, lo, 2)
        assert 1 <= a <= 6


def test_dot_and_json_export():
    P = build_face_poset(4, 2)
    text = P.to_dot()
    assert text.startswith("digraph")
    assert text.count("->") == len(P.covers())
    obj = P.to_json()
    assert len(obj["elements"]) == len(P)
    assert obj["ranks"] == P.ranks


def test_mobius_values_on_boolean_lattice():
    B = boolean_lattice(3)
    bot = B.index[0]
    top = B.index[7]
    assert B.mobius(bot, top) == -1  # (-1)^3
    assert B.mobius(bot, B.index[3]) == 1
