import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from rootcluster.clustercalc import (
    ExtensionPair,
    RootPair,
    ascending_chain,
    ascending_index,
    aut_group,
    cluster_partition,
    cluster_report,
    cluster_size,
    cluster_tower,
    descending_chain,
    hint_check,
    link_profile,
    lm_profile,
    normalizer_restriction,
    restriction_profile,
    root_capacity,
    tower_sweep,
)
from rootcluster.constructions import (
    cyclic_group,
    metacyclic,
    symmetric,
    tuple_action,
    tuple_fields,
    wreathlike,
)
from rootcluster.errors import (
    BadOrdering,
    BadParameter,
    InvalidExtensionPair,
    InvalidRootPair,
    NotAnExtension,
)
from rootcluster.magnification import magnified_extension
from rootcluster.permcore import (
    Permutation,
    closure,
    conjugate_subgroup,
    core,
    fixed_points,
    intersect,
    join,
    normalizer,
    pointwise_stabilizer,
    stabilizer,
    subgroups,
)

from strategies import relabelled_pairs, transitive_pairs

RANDOM = settings(
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)


class TestPairs:
    def test_non_transitive_group(self):
        G = closure(4, [Permutation.from_cycles(4, "(1 2)")])
        with pytest.raises(InvalidRootPair):
            RootPair.from_group(G)

    def test_wrong_stabilizer(self, s4):
        with pytest.raises(InvalidRootPair):
            RootPair(s4, stabilizer(s4, 2))

    def test_extension_needs_subgroup(self, s4, d4):
        with pytest.raises(InvalidExtensionPair):
            ExtensionPair(d4, s4.full())

    def test_extension_degree(self, s4, klein):
        assert ExtensionPair(s4, klein).degree == 6


class TestClusters:
    @pytest.mark.parametrize(
        "pair,expected",
        [
            (lambda: metacyclic(9), (9, 1, 9)),
            (lambda: metacyclic(12), (12, 2, 6)),
            (lambda: tuple_action(5, 2), (20, 2, 10)),
            (lambda: wreathlike(3, 2), (6, 3, 2)),
            (lambda: symmetric(4), (4, 1, 4)),
        ],
    )
    def test_cluster_report(self, pair, expected):
        rep = cluster_report(pair())
        assert (rep.n, rep.r, rep.s) == expected
        assert rep.aut_order == rep.r

    def test_partition(self, wreath32):
        assert cluster_partition(wreath32) == ((1, 2, 3), (4, 5, 6))

    def test_aut_group(self, wreath32):
        assert aut_group(wreath32).order == 3

    @RANDOM
    @given(transitive_pairs())
    def test_cluster_size_agrees_three_ways(self, P):
        rep = cluster_report(P)
        G, H = P.group, P.stabilizer
        assert rep.r * rep.s == P.n
        assert rep.r == len(fixed_points(H)) == normalizer(G, H).order // H.order
        assert all(len(block) == rep.r for block in cluster_partition(P))
        t, u = ascending_index(P)
        assert t * u == P.n

    @settings(max_examples=25, deadline=None)
    @given(relabelled_pairs())
    def test_relabelling_keeps_the_report(self, pairs):
        P, Q = pairs
        a, b = cluster_report(P), cluster_report(Q)
        assert (a.n, a.r, a.s, a.aut_order) == (b.n, b.r, b.s, b.aut_order)
        assert ascending_index(P) == ascending_index(Q)

    @settings(max_examples=25, deadline=None)
    @given(relabelled_pairs(), st.data())
    def test_conjugate_stabilizer_has_the_same_cluster_size(self, pairs, data):
        P, _ = pairs
        G, H = P.group, P.stabilizer
        g = data.draw(st.sampled_from(G.elements))
        assert cluster_size(G, conjugate_subgroup(G, g, H)) == cluster_report(P).r


class TestTowers:
    def test_metacyclic_9_orderings(self):
        P = metacyclic(9)
        short = cluster_tower(P, [1, 2, 4, 3, 5, 6, 7, 8, 9])
        assert (short.degree_sequence, short.length) == ((9, 54), 3)
        long = cluster_tower(P, [1, 4, 2, 3, 5, 6, 7, 8, 9])
        assert (long.degree_sequence, long.length) == ((9, 18, 54), 4)
        assert long.jump_indices == (2, 3)
        assert P.group.order <= long.order_bound

    def test_metacyclic_8_sweep(self):
        sweep = tower_sweep(metacyclic(8))
        assert sweep.orderings == 24
        assert sweep.bound_holds
        assert {(o.degree_sequence, o.length) for o in sweep.outcomes} == {((8, 32), 3), ((8, 16, 32), 4)}
        assert sum(o.count for o in sweep.outcomes) == 24

    @pytest.mark.parametrize("ordering", [[1, 1, 2, 3, 4, 5, 6, 7, 8], [1, 2], [1, 2, 3, 4, 5, 6, 7, 8, 10]])
    def test_bad_ordering(self, ordering):
        with pytest.raises(BadOrdering):
            cluster_tower(metacyclic(9), ordering)

    def test_sweep_cluster_limit(self):
        with pytest.raises(BadParameter):
            tower_sweep(metacyclic(9), max_clusters=5)


class TestChains:
    def test_nth_root_12(self, metacyclic12):
        desc = descending_chain(metacyclic12)
        assert desc.step_indices == (2, 2)
        assert desc.field_degrees == (12, 6, 3)
        assert desc.terminal_flag == "self-normalizing"
        asc = ascending_chain(metacyclic12)
        assert asc.step_indices == (2, 2)
        assert (asc.ascending_index, asc.complement_index) == (2, 6)
        assert ascending_index(metacyclic12) == (2, 6)

    @pytest.mark.parametrize("n", [9, 15, 21])
    def test_odd_nth_root_chains_are_singletons(self, n):
        P = metacyclic(n)
        assert len(descending_chain(P).subgroup_chain) == 1
        assert len(ascending_chain(P).subgroup_chain) == 1

    def test_degenerate_extension(self, s4):
        E = ExtensionPair(s4, s4.full())
        assert descending_chain(E).terminal_flag == "degenerate"
        assert ascending_chain(E).terminal_flag == "degenerate"

    def test_link_profile_coinciding(self, wreath32):
        link = link_profile(wreath32)
        assert link.N_eq_F
        assert link.relations == {"n": 6, "r": 3, "s": 2, "t": 2, "u": 3}
        assert (link.descending_shape, link.ascending_shape) == ("L>N>K", "K<F<L")
        assert all(link.clauses.values())

    def test_link_profile_galois(self):
        link = link_profile(wreathlike(5, 1))
        assert (link.descending_shape, link.ascending_shape) == ("L>K", "K<L")

    def test_link_profile_primitive(self):
        link = link_profile(symmetric(4))
        assert not link.N_eq_F
        assert (link.descending_shape, link.ascending_shape) == ("singleton", "singleton")


class TestCapacity:
    def test_nth_root_12_capacities(self, metacyclic12):
        G, H = metacyclic12.group, metacyclic12.stabilizer
        M1 = pointwise_stabilizer(G, [1, 3])
        M2 = pointwise_stabilizer(G, [1, 4])
        assert root_capacity(G, M1, H).rho == 6
        assert root_capacity(G, M2, H).rho == 4
        assert root_capacity(G, intersect(M1, M2), H).rho == 12
        assert root_capacity(G, join(M1, M2), H).rho == 2
        for U in (M1, M2, intersect(M1, M2)):
            cap = root_capacity(G, U, H)
            assert cap.rho == cap.a * cap.r
            assert lm_profile(G, U, H).holds

    def test_capacity_of_l_itself_is_r(self, wreath32):
        cap = root_capacity(wreath32.group, wreath32.stabilizer, wreath32.stabilizer)
        assert (cap.rho, cap.a, cap.r, cap.s) == (3, 1, 3, 2)
        assert len(cap.roots) == 3
        assert cap.witness_cosets == (1,)

    def test_not_an_extension(self, wreath32):
        with pytest.raises(NotAnExtension):
            root_capacity(wreath32.group, wreath32.group.full(), wreath32.stabilizer)

    @settings(max_examples=15, deadline=None)
    @given(relabelled_pairs())
    def test_capacity_grows_with_the_field(self, pairs):
        P, _ = pairs
        G, H = P.group, P.stabilizer
        rho = {U.keys: root_capacity(G, U, H).rho for U in subgroups(H)}
        for small, r_small in rho.items():
            for large, r_large in rho.items():
                if small <= large:
                    # a smaller subgroup is a larger field M
                    assert r_small >= r_large


class TestAutomorphismLaws:
    def test_restriction_profile(self):
        G, U_M, U_L = tuple_fields(5, 1, 2)
        prof = restriction_profile(G, U_M, U_L)
        assert (prof.r_K_M, prof.r_L_M, prof.r_K_L) == (2, 1, 1)
        assert not prof.restricts
        assert prof.aut_divides

    def test_normalizer_restriction(self):
        G, U_M, U_L = tuple_fields(5, 1, 3)
        assert normalizer_restriction(G, U_M, U_L).divides

    def test_hint_on_magnified_pair(self, wreath23):
        E, D = magnified_extension(wreath23, cyclic_group(3))
        hint = hint_check(E.ambient, E.sub, D.embed(wreath23.stabilizer, D.right))
        assert hint.hypotheses_hold
        assert hint.conclusion is True

    def test_hint_hypothesis_failure(self, wreath23):
        G, H = wreath23.group, wreath23.stabilizer
        hint = hint_check(G, core(G, H), H)
        assert not hint.intersection_condition
        assert hint.conclusion is None

    def test_cluster_size_of_subgroup(self, s4, klein):
        assert cluster_size(s4, klein) == 6
