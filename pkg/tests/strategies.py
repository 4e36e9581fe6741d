"""Hypothesis strategies producing faithful transitive pairs with |G| ≤ 5000"""
from typing import Tuple

from hypothesis import assume
from hypothesis import strategies as st

from rootcluster import constructions
from rootcluster.clustercalc import RootPair
from rootcluster.errors import GroupTooLarge
from rootcluster.permcore import Permutation, closure, conjugate, is_transitive

MAX_ORDER = 5000

FAMILIES = [
    lambda: constructions.metacyclic(5),
    lambda: constructions.metacyclic(6),
    lambda: constructions.metacyclic(8),
    lambda: constructions.metacyclic(10),
    lambda: constructions.metacyclic(12),
    lambda: constructions.wreathlike(2, 2),
    lambda: constructions.wreathlike(2, 3),
    lambda: constructions.wreathlike(3, 2),
    lambda: constructions.wreathlike(4, 2),
    lambda: constructions.tuple_action(4, 2),
    lambda: constructions.tuple_action(5, 1),
    lambda: constructions.units_regular(12),
    lambda: constructions.alternating(5),
]


@st.composite
def random_generated(draw, min_degree: int = 3, max_degree: int = 7) -> RootPair:
    degree = draw(st.integers(min_degree, max_degree))
    images = draw(st.lists(st.permutations(range(1, degree + 1)), min_size=1, max_size=3))
    try:
        G = closure(degree, [Permutation(p) for p in images], MAX_ORDER)
    except GroupTooLarge:
        assume(False)
    assume(is_transitive(G))
    return RootPair.from_group(G, name=f"random:{degree}")


def relabel(P: RootPair, sigma: Permutation) -> RootPair:
    G = closure(P.n, [conjugate(sigma, g) for g in P.group.generators], MAX_ORDER)
    return RootPair.from_group(G, name=f"relabelled {P.name}")


@st.composite
def relabelled_pairs(draw) -> Tuple[RootPair, RootPair]:
    """A known construction and the same construction with its points shuffled"""
    P = draw(st.sampled_from(FAMILIES))()
    sigma = Permutation(draw(st.permutations(range(1, P.n + 1))))
    return P, relabel(P, sigma)


def relabelled_family() -> st.SearchStrategy[RootPair]:
    return relabelled_pairs().map(lambda pair: pair[1])


def transitive_pairs() -> st.SearchStrategy[RootPair]:
    return st.one_of(random_generated(), relabelled_family())
