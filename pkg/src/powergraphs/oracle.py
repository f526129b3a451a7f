"""Predicted properties of the complement of the proper power graph, per the classification theorems.

A prediction of ``None`` means the classification is silent (or
self-contradictory) for that group.  Groups are identified by exact
characterisations that use only the order, the element-order histogram and
cyclicity, e.g. "Q_8 is the group of order 8 with one involution and six
elements of order 4".  These invariants separate every group the theorems
name, so permutation-generated groups get predictions too.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .arith import euler_phi, factorize, is_prime, is_prime_power
from .groups import FiniteGroup, GroupSpec

INF = math.inf


@dataclass(frozen=True)
class GroupProfile:
    order: int
    histogram: dict[int, int]

    @property
    def cyclic(self) -> bool:
        return self.histogram.get(self.order, 0) > 0

    @property
    def exponent(self) -> int:
        return math.lcm(*self.histogram)

    def cyclic_of_order(self, *orders: int) -> bool:
        return self.cyclic and self.order in orders

    def hist_is(self, expected: dict[int, int]) -> bool:
        return self.histogram == expected


def _is_pq_m(n: int) -> bool:
    """n = p * q^m with p, q distinct primes and m >= 1."""
    fac = factorize(n)
    return len(fac) == 2 and min(e for _, e in fac) == 1


def _is_2p(n: int) -> bool:
    return n % 2 == 0 and is_prime(n // 2)


def _is_3p(n: int) -> bool:
    return n % 3 == 0 and is_prime(n // 3)


def identify(profile: GroupProfile) -> str | None:
    """Name of the group when one of the theorems names it individually."""
    n, h = profile.order, profile.histogram
    if profile.cyclic:
        return f"Z{n}"
    if profile.exponent == 2:
        return "Z2^" + str(n.bit_length() - 1)
    if n == 6:
        return "S3"
    if n == 8:
        if h == {1: 1, 2: 1, 4: 6}:
            return "Q8"
        if h == {1: 1, 2: 5, 4: 2}:
            return "D8"
        if h == {1: 1, 2: 3, 4: 4}:
            return "Z4xZ2"
    if n == 9:
        return "Z3xZ3"
    if is_generalized_quaternion(profile):
        return f"Q{n}"
    return None


def is_generalized_quaternion(profile: GroupProfile) -> bool:
    """Non-cyclic 2-group with a unique involution (exactly the Q_{2^a}, a >= 3)."""
    n = profile.order
    return n >= 8 and n & (n - 1) == 0 and not profile.cyclic and profile.histogram.get(2, 0) == 1


def _claw_free_iii(profile: GroupProfile) -> bool:
    """Non-nilpotent, order 2^n*3 or 2*3^m (n, m > 1), all non-trivial elements of order 2 or 3.

    With both orders 2 and 3 present and no element of order 6 the group
    cannot be nilpotent, so the element orders settle non-nilpotency.
    """
    h = profile.histogram
    if set(h) != {1, 2, 3}:
        return False
    fac = dict(factorize(profile.order))
    if set(fac) != {2, 3}:
        return False
    return (fac[3] == 1 and fac[2] > 1) or (fac[2] == 1 and fac[3] > 1)


@dataclass(frozen=True)
class PredictedProperties:
    identified_as: str | None
    is_complete: bool | None
    is_claw_free: bool | None
    is_bipartite: bool | None
    is_triangle_free: bool | None
    component_count: int | None
    isolated_vertex_count: int | None
    diameter: float | None
    girth: float | None
    is_planar: bool | None
    is_toroidal: bool | None
    is_projective: bool | None
    is_path: bool | None
    is_star: bool | None
    is_cycle: bool | None
    is_outerplanar: bool | None
    k14_free: bool | None
    k23_free: bool | None

    def as_dict(self) -> dict:
        return asdict(self)

    def decisive(self) -> dict:
        return {k: v for k, v in self.as_dict().items() if v is not None and k != "identified_as"}

    def consistency_errors(self, vertices: int) -> list[str]:
        """Implications the predictions must satisfy among themselves."""
        errs = []
        if self.is_bipartite and self.is_triangle_free is False:
            errs.append("bipartite but not triangle-free")
        if self.is_complete and vertices >= 3 and self.girth not in (None, 3):
            errs.append("complete on >= 3 vertices but girth is not 3")
        if self.component_count is not None and self.component_count >= 2 and self.diameter not in (None, INF):
            errs.append("disconnected but finite diameter")
        if self.is_outerplanar and self.is_planar is False:
            errs.append("outerplanar but not planar")
        if self.is_planar and (self.is_toroidal or self.is_projective):
            errs.append("planar graphs are neither toroidal nor projective in the classification sense")
        if self.is_cycle and self.is_planar is False:
            errs.append("cycle but not planar")
        if self.is_outerplanar is not None and self.k23_free is not None and self.is_outerplanar != self.k23_free:
            errs.append("outerplanarity and K_{2,3}-freeness disagree")
        return errs


def classification_oracle(spec: GroupSpec | None, group: FiniteGroup) -> PredictedProperties:
    """Evaluate every classification statement for ``group``.

    ``spec`` is only recorded; the prediction depends on the group's order
    profile so that differently-tagged copies of the same group agree.
    """
    n = group.order
    if n < 2:
        raise ValueError("the trivial group has an empty complement graph")
    prof = GroupProfile(n, group.order_histogram())
    cyc = prof.cyclic
    ppow = is_prime_power(n)
    elem2 = prof.exponent == 2
    quat = is_generalized_quaternion(prof)
    name = identify(prof)

    z_pn = cyc and ppow
    klein = elem2 and n == 4
    s3 = n == 6 and not cyc
    q8 = name == "Q8"
    z3z3 = name == "Z3xZ3"
    d8 = name == "D8"
    z4z2 = name == "Z4xZ2"
    z2_3 = elem2 and n == 8

    # complete
    complete = elem2

    # claw-free
    # every non-trivial element of order 3 forces a 3-group
    exp3_3group = set(prof.histogram) == {1, 3}
    claw_free = (
        z_pn or prof.cyclic_of_order(6) or s3 or elem2 or q8 or exp3_3group or _claw_free_iii(prof)
    )

    # bipartite / triangle-free
    bip = z_pn or (cyc and _is_pq_m(n))

    # components and isolated vertices
    if cyc:
        comps = n - 1 if ppow else euler_phi(n) + 1
        isolated = n - 1 if ppow else euler_phi(n)
    elif quat:
        comps, isolated = 2, 1
    else:
        comps, isolated = 1, 0

    # diameter: Z_2 is both cyclic and elementary abelian, and its complement K_1 fits neither value
    diam: float | None
    if n == 2:
        diam = None
    elif cyc or quat:
        diam = INF
    elif elem2:
        diam = 1
    else:
        diam = 2

    # girth
    if z_pn or (cyc and _is_2p(n)):
        gr: float = INF
    elif cyc and _is_pq_m(n):
        gr = 4
    else:
        gr = 3

    planar = z_pn or prof.cyclic_of_order(12) or (cyc and (_is_2p(n) or _is_3p(n))) or klein or q8 or s3
    toroidal = prof.cyclic_of_order(18, 20, 28) or z3z3 or z2_3 or z4z2 or d8
    projective = prof.cyclic_of_order(20) or z4z2 or d8
    outer = z_pn or klein or (cyc and _is_2p(n))

    return PredictedProperties(
        identified_as=name,
        is_complete=complete,
        is_claw_free=claw_free,
        is_bipartite=bip,
        is_triangle_free=bip,
        component_count=comps,
        isolated_vertex_count=isolated,
        diameter=diam,
        girth=gr,
        is_planar=planar,
        is_toroidal=toroidal,
        is_projective=projective,
        is_path=False,
        is_star=False,
        is_cycle=klein,
        is_outerplanar=outer,
        k14_free=z_pn or prof.cyclic_of_order(6) or klein,
        k23_free=outer,
    )
