"""Builders for the group families the calculus works with, plus totient arithmetic"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint, totient

from .clustercalc import RootPair
from .errors import BadParameter, GroupTooLarge
from .permcore import (
    DEFAULT_LIMITS,
    Group,
    Key,
    Limits,
    Permutation,
    Subgroup,
    closure,
    direct_product,
    pointwise_stabilizer,
)

log = logging.getLogger("rootcluster.constructions")


def _build(degree: int, keys: Sequence[Key], limits: Optional[Limits]) -> Group:
    limits = limits or DEFAULT_LIMITS
    if degree > limits.max_degree:
        raise GroupTooLarge(limits.max_degree, "points")
    return closure(degree, [Permutation.wrap(tuple(k)) for k in keys], limits.max_order)


def unit_generators(n: int) -> List[int]:
    """Generators of (Z/n)^×, found by scanning units in increasing order"""
    gens: List[int] = []
    span = {1 % n}
    for u in range(2, n):
        if gcd(u, n) != 1 or u in span:
            continue
        gens.append(u)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = (x * g) % n
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def metacyclic(n: int, limits: Optional[Limits] = None) -> RootPair:
    """Z/n ⋊ (Z/n)^× acting by j ↦ α + u·j, the Galois group of xⁿ − c.

    Point j + 1 stands for the root a·bʲ. The model assumes the generic
    case where the splitting field has degree n·φ(n).
    """
    if n < 3:
        raise BadParameter(f"metacyclic needs n ≥ 3, got {n}")
    shift = [(j + 1) % n for j in range(n)]
    scalings = [[(u * j) % n for j in range(n)] for u in unit_generators(n)]
    group = _build(n, [shift] + scalings, limits)
    log.debug(f"metacyclic({n}): order {group.order}")
    return RootPair.from_group(group, name=f"metacyclic:{n}")


def symmetric(n: int, limits: Optional[Limits] = None) -> RootPair:
    """Natural action of S_n"""
    if n < 1:
        raise BadParameter(f"symmetric needs n ≥ 1, got {n}")
    keys = []
    if n > 1:
        keys.append([1, 0] + list(range(2, n)))
        keys.append([(j + 1) % n for j in range(n)])
    return RootPair.from_group(_build(n, keys, limits), name=f"symmetric:{n}")


def alternating(n: int, limits: Optional[Limits] = None) -> RootPair:
    """Natural action of A_n, generated by the 3-cycles (1 2 i)"""
    if n < 3:
        raise BadParameter(f"alternating needs n ≥ 3, got {n}")
    keys = []
    for i in range(2, n):
        images = list(range(n))
        images[0], images[1], images[i] = 1, i, 0
        keys.append(images)
    return RootPair.from_group(_build(n, keys, limits), name=f"alternating:{n}")


def wreathlike(r: int, s: int, limits: Optional[Limits] = None) -> RootPair:
    """(Z/r)^s ⋊ Z/s on s packets of r points; the stabilizer fixes exactly r points.

    Point p·r + q + 1 is position q of packet p. For r = 1 the packets
    carry no structure and the natural action of S_s is returned instead,
    which is the group with cluster size 1 on s points.
    """
    if r < 1 or s < 1 or r * s < 3:
        raise BadParameter(f"wreathlike needs r ≥ 1, s ≥ 1, rs ≥ 3, got r={r}, s={s}")
    if r == 1:
        pair = symmetric(s, limits)
        return RootPair(pair.group, pair.stabilizer, name=f"wreathlike:1:{s}")
    n = r * s
    keys = []
    for p in range(s):
        images = list(range(n))
        for q in range(r):
            images[p * r + q] = p * r + (q + 1) % r
        keys.append(images)
    keys.append([((i // r + 1) % s) * r + i % r for i in range(n)])
    group = _build(n, keys, limits)
    return RootPair.from_group(group, name=f"wreathlike:{r}:{s}")


def tuple_action(n: int, k: int, limits: Optional[Limits] = None) -> RootPair:
    """S_n on ordered k-tuples of distinct points, tuples in lexicographic order"""
    if n < 3 or not 1 <= k <= n - 2:
        raise BadParameter(f"tuple_action needs n ≥ 3 and 1 ≤ k ≤ n−2, got n={n}, k={k}")
    limits = limits or DEFAULT_LIMITS
    tuples = list(itertools.permutations(range(n), k))
    if len(tuples) > limits.max_degree:
        raise GroupTooLarge(limits.max_degree, "points")
    index = {t: i for i, t in enumerate(tuples)}
    base = [[1, 0] + list(range(2, n)), [(j + 1) % n for j in range(n)]]
    keys = [[index[tuple(g[x] for x in t)] for t in tuples] for g in base]
    group = _build(len(tuples), keys, limits)
    return RootPair.from_group(group, name=f"tuples:{n}:{k}")


def tuple_fields(
    n: int, k: int, j: int, limits: Optional[Limits] = None
) -> Tuple[Group, Subgroup, Subgroup]:
    """Natural S_n with the fields L_j ⊇ L_k, L_i = K(α_1, …, α_i).

    Returns (S_n, Stab(1..j), Stab(1..k)) in the order (Γ, U_M, U_L).
    """
    if not 0 <= k <= j <= n:
        raise BadParameter(f"tuple_fields needs 0 ≤ k ≤ j ≤ n, got n={n}, k={k}, j={j}")
    G = symmetric(n, limits).group
    return G, pointwise_stabilizer(G, range(1, j + 1)), pointwise_stabilizer(G, range(1, k + 1))


def cyclic_group(m: int, limits: Optional[Limits] = None) -> Group:
    """Z/m acting regularly"""
    if m < 1:
        raise BadParameter(f"cyclic group needs m ≥ 1, got {m}")
    keys = [[(i + 1) % m for i in range(m)]] if m > 1 else []
    return _build(m, keys, limits)


def abelian_group(orders: Sequence[int], limits: Optional[Limits] = None) -> Group:
    """Direct product of cyclic groups, e.g. (2, 2) for the Klein four-group"""
    if not orders:
        return cyclic_group(1, limits)
    group = cyclic_group(orders[0], limits)
    for m in orders[1:]:
        group = direct_product(group, cyclic_group(m, limits), limits).group
    return group


def units_regular(n: int, limits: Optional[Limits] = None) -> RootPair:
    """(Z/n)^× acting on itself by multiplication: the Galois pair of the n-th cyclotomic field"""
    if n < 3:
        raise BadParameter(f"units_regular needs n ≥ 3, got {n}")
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    index = {u: i for i, u in enumerate(units)}
    keys = [[index[(g * u) % n] for u in units] for g in unit_generators(n)]
    return RootPair.from_group(_build(len(units), keys, limits), name=f"units:{n}")


def cluster_size_pair(n: int, r: int, limits: Optional[Limits] = None) -> RootPair:
    """A degree-n pair with cluster size r, for any r dividing n"""
    if n < 3 or r < 1 or n % r:
        raise BadParameter(f"Need n ≥ 3 and r | n, got n={n}, r={r}")
    if r == 1:
        return symmetric(n, limits)
    return wreathlike(r, n // r, limits)


def ascending_index_pair(n: int, t: int, limits: Optional[Limits] = None) -> RootPair:
    """A degree-n pair with ascending index t, for any t dividing n"""
    if n < 3 or t < 1 or n % t:
        raise BadParameter(f"Need n ≥ 3 and t | n, got n={n}, t={t}")
    if t == 1:
        return symmetric(n, limits)
    if t == n:
        return wreathlike(n, 1, limits)
    return wreathlike(n // t, t, limits)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArithProfile:
    n: int
    factorization: Dict[int, int]
    phi: int
    v2: int


def arith(n: int) -> ArithProfile:
    if n < 1:
        raise BadParameter(f"arith needs n ≥ 1, got {n}")
    factors = {int(p): int(e) for p, e in sorted(factorint(n).items())}
    return ArithProfile(n=n, factorization=factors, phi=int(totient(n)), v2=factors.get(2, 0))


@dataclass(frozen=True)
class EulerReport:
    """Totient relations for l | n, n = l·m"""

    n: int
    l: int
    m: int
    k: int
    phi_n: int
    phi_l: int
    ratio_formula: bool
    k_divides_m: bool
    phi_divides: bool
    phi_equal: bool
    phi_equal_criterion: bool
    ratio_is_m: bool
    same_primes: bool

    @property
    def consistent(self) -> bool:
        return (
            self.ratio_formula
            and self.k_divides_m
            and self.phi_divides
            and self.phi_equal == self.phi_equal_criterion
            and self.ratio_is_m == self.same_primes
        )


def euler_checks(n: int, l: int) -> EulerReport:
    if l < 1 or n < 1 or n % l:
        raise BadParameter(f"euler_checks needs l | n, got n={n}, l={l}")
    fn, fl = arith(n), arith(l)
    m = n // l
    k = 1
    for p, e in fn.factorization.items():
        if p not in fl.factorization:
            k *= p ** e
    ratio = Fraction(fn.phi, fl.phi)
    return EulerReport(
        n=n,
        l=l,
        m=m,
        k=k,
        phi_n=fn.phi,
        phi_l=fl.phi,
        ratio_formula=ratio == Fraction(m * arith(k).phi, k),
        k_divides_m=m % k == 0,
        phi_divides=fn.phi % fl.phi == 0,
        phi_equal=fn.phi == fl.phi,
        phi_equal_criterion=n == l or (l % 2 == 1 and n == 2 * l),
        ratio_is_m=ratio == m,
        same_primes=set(fn.factorization) == set(fl.factorization),
    )
