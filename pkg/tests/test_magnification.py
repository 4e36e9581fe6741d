from fractions import Fraction

import pytest
from hypothesis import given, settings

from rootcluster import magnification
from rootcluster.clustercalc import ExtensionPair, ascending_index, cluster_report
from rootcluster.constructions import (
    abelian_group,
    alternating,
    cyclic_group,
    metacyclic,
    symmetric,
    tuple_action,
    units_regular,
    wreathlike,
)
from rootcluster.errors import DegreeTooSmall, InvariantViolation
from rootcluster.magnification import (
    base_change_verify,
    detect_strong_magnification,
    is_weak_magnification,
    magnified_extension,
    magnify,
    strong_chain_verify,
    to_galois_pair,
)
from rootcluster.permcore import core, normalizer

from strategies import relabelled_pairs

PAIRS = {
    "wreathlike:3:2": lambda: wreathlike(3, 2),
    "tuples:4:1": lambda: tuple_action(4, 1),
    "metacyclic:9": lambda: metacyclic(9),
}
GROUPS = {
    "Z/2": lambda: cyclic_group(2),
    "Z/3": lambda: cyclic_group(3),
    "Z/2xZ/2": lambda: abelian_group([2, 2]),
}


def factors(P):
    return sorted(d.magnification_factor for d in detect_strong_magnification(P))


class TestReduction:
    def test_klein_quotient_is_regular(self, s4, klein):
        P = to_galois_pair(ExtensionPair(s4, klein, "S4/V4"))
        assert (P.n, P.group.order) == (6, 6)
        assert cluster_report(P).r == 6
        assert P.name == "S4/V4"

    def test_faithful_pair_is_unchanged(self, wreath32):
        P = to_galois_pair(wreath32.as_extension())
        assert (P.n, P.group.order) == (6, 18)

    def test_kernel_must_be_the_core(self, s4, klein, monkeypatch):
        monkeypatch.setattr(magnification, "core", lambda G, H: G.full())
        with pytest.raises(InvariantViolation, match="kernel"):
            to_galois_pair(ExtensionPair(s4, klein))


class TestMagnify:
    def test_wreath_by_two(self, wreath32):
        M = magnify(wreath32, cyclic_group(2))
        rep = cluster_report(M)
        assert (rep.n, rep.r, rep.s) == (12, 6, 2)
        assert ascending_index(M) == (4, 3)

    def test_degree_too_small(self):
        with pytest.raises(DegreeTooSmall):
            magnify(symmetric(2), cyclic_group(2))

    def test_extension_name(self, wreath32):
        E, D = magnified_extension(wreath32, cyclic_group(3))
        assert E.name == "wreathlike:3:2*3"
        assert E.degree == 18
        assert D.group.order == 54

    @pytest.mark.slow
    @pytest.mark.parametrize("pair", PAIRS)
    @pytest.mark.parametrize("group", GROUPS)
    def test_roundtrip(self, pair, group):
        P, R = PAIRS[pair](), GROUPS[group]()
        base = cluster_report(P)
        t, u = ascending_index(P)
        M = magnify(P, R)
        rep = cluster_report(M)
        assert (rep.r, rep.s) == (base.r * R.order, base.s)
        assert ascending_index(M) == (t * R.order, u)
        assert R.order in factors(M)
        assert strong_chain_verify(P, R).holds

        recovered = [
            cluster_report(to_galois_pair(ExtensionPair(M.group, d.L_subgroup)))
            for d in detect_strong_magnification(M)
            if d.magnification_factor == R.order
        ]
        assert (base.n, base.r, base.s) in [(L.n, L.r, L.s) for L in recovered]


class TestDetection:
    @pytest.mark.parametrize("pair", [lambda: metacyclic(4), lambda: alternating(5), lambda: symmetric(4)])
    def test_primitive(self, pair):
        assert factors(pair()) == []

    def test_sextic_root(self):
        assert 2 in factors(metacyclic(6))

    def test_units(self):
        assert factors(units_regular(15))
        assert factors(units_regular(8)) == []

    @settings(max_examples=10, deadline=None)
    @given(relabelled_pairs())
    def test_relabelling_keeps_the_decompositions(self, pairs):
        P, Q = pairs

        def shapes(pair):
            return sorted((d.A.order, d.B.order, d.L_subgroup.order) for d in detect_strong_magnification(pair))

        assert shapes(P) == shapes(Q)

    def test_decomposition_recovers_l(self, wreath32):
        M = magnify(wreath32, cyclic_group(2))
        reports = [d for d in detect_strong_magnification(M) if d.magnification_factor == 2]
        assert reports
        d = reports[0]
        assert d.A.order * d.B.order == M.group.order
        L = cluster_report(to_galois_pair(ExtensionPair(M.group, d.L_subgroup)))
        assert (L.n, L.r, L.s) == (6, 3, 2)


class TestWeakMagnification:
    def test_normalizer_field_is_not_weak(self, wreath23):
        G, H = wreath23.group, wreath23.stabilizer
        weak = is_weak_magnification(G, H, normalizer(G, H))
        assert not weak.holds
        assert weak.factor == Fraction(2, 3)

    def test_galois_closure_is_weak(self, wreath23):
        G, H = wreath23.group, wreath23.stabilizer
        weak = is_weak_magnification(G, core(G, H), H)
        assert weak.holds
        assert weak.factor == 12

    def test_strong_implies_weak(self, wreath32):
        E, D = magnified_extension(wreath32, cyclic_group(2))
        weak = is_weak_magnification(E.ambient, E.sub, D.embed(wreath32.stabilizer, D.right))
        assert (weak.holds, weak.factor) == (True, 2)


class TestChainsAndBaseChange:
    def test_strong_chains(self, metacyclic12):
        rep = strong_chain_verify(metacyclic12, cyclic_group(2))
        assert rep.holds

    def test_strong_chains_trivial_group(self, wreath32):
        assert strong_chain_verify(wreath32, cyclic_group(1)).holds

    def test_base_change_wreath(self, wreath23):
        rep = base_change_verify(wreath23, cyclic_group(5))
        assert rep.holds
        assert rep.capacity_subfields > 1
        assert rep.strong_preserved is None

    def test_base_change_keeps_magnification(self, wreath23):
        rep = base_change_verify(wreath23, cyclic_group(3), magnifier=cyclic_group(2))
        assert (rep.strong_preserved, rep.weak_preserved) == (True, True)
        assert rep.holds

    @pytest.mark.slow
    @pytest.mark.parametrize("pair", [lambda: wreathlike(2, 3), lambda: metacyclic(12), lambda: tuple_action(4, 1)])
    @pytest.mark.parametrize("m", [3, 5])
    def test_base_change_sweep(self, pair, m):
        assert base_change_verify(pair(), cyclic_group(m)).holds
