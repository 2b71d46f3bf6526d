import random

import pytest
from hypothesis import given, strategies as st

from nbhdrecon import (
    Graph,
    ResourceLimitError,
    SetFamily,
    VertexSet,
    check_convexity_axioms,
    closed_support,
    complement_family,
    convexity_witness,
    digital_convexity,
    is_digitally_convex,
    union_closure,
)

from helpers import P3, WORKED_EXAMPLE, oracle_is_convex, random_graph, vs1


def fam(universe, *sets):
    return SetFamily(universe, [VertexSet.from_members(s, universe) for s in sets])


class TestMembership:
    def test_complete_graph_rejects_proper_nonempty(self):
        k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        for bits in range(1, 15):
            assert not is_digitally_convex(k4, VertexSet(bits, 4))
        assert is_digitally_convex(k4, VertexSet.empty(4))
        assert is_digitally_convex(k4, VertexSet.full(4))

    def test_path_endpoint(self):
        assert is_digitally_convex(P3, P3.subset([0]))
        assert not is_digitally_convex(P3, P3.subset([1]))

    def test_worked_example_pendant(self):
        assert is_digitally_convex(WORKED_EXAMPLE, vs1(8, 5))

    def test_full_set_vacuous(self):
        g = random_graph(6, random.Random(5))
        assert is_digitally_convex(g, g.vertex_set())

    def test_witness_private_neighbors(self):
        w = convexity_witness(P3, P3.subset([0]))
        assert w.convex
        # outside vertices 1 and 2 both keep 2 as a private neighbor
        assert w.private_neighbors == {1: 2, 2: 2}

    def test_witness_violator(self):
        k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
        w = convexity_witness(k3, k3.subset([0]))
        assert not w.convex and w.violator in (1, 2)

    def test_agrees_with_set_oracle(self):
        rng = random.Random(88)
        for _ in range(80):
            n = rng.randint(1, 7)
            g = random_graph(n, rng)
            bits = rng.getrandbits(n)
            assert is_digitally_convex(g, VertexSet(bits, n)) == \
                oracle_is_convex(g, VertexSet(bits, n).members())


class TestEnumeration:
    def test_k1(self):
        assert digital_convexity(Graph(1)) == fam(1, [], [0])

    def test_complete_graphs(self):
        for n in (2, 3, 5):
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
            assert digital_convexity(g) == SetFamily(n, [0, (1 << n) - 1])

    def test_p3(self):
        assert digital_convexity(P3) == fam(3, [], [0], [2], [0, 1, 2])

    def test_collision_pair_same_convexity(self, k33, prism):
        assert digital_convexity(k33) == digital_convexity(prism)

    def test_always_contains_empty_and_full(self):
        rng = random.Random(12)
        for _ in range(30):
            g = random_graph(rng.randint(1, 6), rng)
            d = digital_convexity(g)
            assert VertexSet.empty(g.n) in d
            assert VertexSet.full(g.n) in d

    def test_matches_membership_predicate(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randint(1, 6)
            g = random_graph(n, rng)
            d = digital_convexity(g)
            for bits in range(1 << n):
                assert (VertexSet(bits, n) in d) == is_digitally_convex(g, VertexSet(bits, n))

    def test_ceiling(self):
        with pytest.raises(ResourceLimitError):
            digital_convexity(Graph(21))


class TestComplementBridge:
    @given(st.integers(1, 8), st.data())
    def test_involution(self, u, data):
        masks = data.draw(st.lists(st.integers(0, (1 << u) - 1), max_size=6))
        f = SetFamily(u, masks)
        assert complement_family(complement_family(f)) == f

    def test_p3_bridge(self):
        d = digital_convexity(P3)
        assert complement_family(d) == union_closure(closed_support(P3))

    def test_empty_full_swap(self):
        f = SetFamily(3, [0, 0b111])
        assert complement_family(f) == f

    def test_complements_equal_union_closure_small(self):
        rng = random.Random(77)
        for _ in range(40):
            g = random_graph(rng.randint(1, 7), rng)
            assert complement_family(digital_convexity(g)) == \
                union_closure(closed_support(g))

    def test_witness_construction_from_complement(self):
        # when S is convex, A = V minus N[S] satisfies N[A] = V minus S
        rng = random.Random(41)
        for _ in range(60):
            n = rng.randint(1, 7)
            g = random_graph(n, rng)
            s = VertexSet(rng.getrandbits(n), n)
            if not is_digitally_convex(g, s):
                continue
            a = ~g.closed_neighborhood_of_set(s)
            assert g.closed_neighborhood_of_set(a) == ~s


class TestAxioms:
    def test_digital_convexity_always_passes(self):
        rng = random.Random(31)
        for _ in range(25):
            g = random_graph(rng.randint(1, 6), rng)
            assert check_convexity_axioms(digital_convexity(g)).ok

    def test_missing_universe_reported(self):
        report = check_convexity_axioms(fam(3, [], [0]))
        assert not report.ok and report.missing_universe
        assert "full vertex set" in report.describe()

    def test_missing_empty_reported(self):
        report = check_convexity_axioms(fam(2, [0, 1]))
        assert not report.ok and report.missing_empty

    def test_intersection_closed_accepts(self):
        assert check_convexity_axioms(fam(3, [], [0], [1], [0, 1, 2])).ok

    def test_violating_pair_reported(self):
        report = check_convexity_axioms(fam(3, [], [0, 1], [1, 2], [0, 1, 2]))
        assert not report.ok
        a, b = report.violating_pair
        assert (a.members(), b.members()) == ((0, 1), (1, 2))

    def test_matches_quadratic_reference(self):
        rng = random.Random(99)
        for _ in range(60):
            u = rng.randint(1, 5)
            masks = {0, (1 << u) - 1}
            masks |= {rng.getrandbits(u) for _ in range(rng.randint(0, 6))}
            f = SetFamily(u, masks)
            closed = all(f.contains_mask(x & y) for x in f.masks for y in f.masks)
            assert check_convexity_axioms(f).ok == closed
