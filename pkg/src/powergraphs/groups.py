"""Finite groups on dense element indices.

Every group built here numbers its elements ``0 .. n-1`` with the identity at
index 0.  Named families multiply in closed form on small tuples; permutation
groups are closed breadth-first from their generators.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .arith import euler_phi, factorize, is_prime, multiplicative_order

DEFAULT_ORDER_CAP = 2000
TABLE_CACHE_LIMIT = 512


class GroupSpecError(ValueError):
    """Invalid family parameters."""


class OrderCapExceeded(GroupSpecError):
    pass


# --------------------------------------------------------------------------
# group specifications
# --------------------------------------------------------------------------


class GroupSpec:
    """Base class for the named-family tags a group is built from."""

    def order(self) -> int:
        raise NotImplementedError

    def validate(self) -> None:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise GroupSpecError(f"cyclic group needs n >= 1, got {self.n}")

    def order(self) -> int:
        return self.n

    def to_text(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    factors: tuple[GroupSpec, ...]

    def validate(self) -> None:
        if not self.factors:
            raise GroupSpecError("direct product needs at least one factor")
        for f in self.factors:
            f.validate()

    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order()
        return out

    def to_text(self) -> str:
        return "x".join(
            f"({f.to_text()})" if isinstance(f, (DirectProduct, Permutation)) else f.to_text()
            for f in self.factors
        )


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    """Dihedral group, parametrised by its order 2n (n >= 3)."""

    order_: int

    def validate(self) -> None:
        if self.order_ % 2 or self.order_ // 2 < 3:
            raise GroupSpecError(f"dihedral group needs order 2n with n >= 3, got {self.order_}")

    def order(self) -> int:
        return self.order_

    def to_text(self) -> str:
        return f"D{self.order_}"


@dataclass(frozen=True)
class Dicyclic(GroupSpec):
    """Dicyclic group Q_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, ab = ba^-1>, n >= 2."""

    order_: int

    def validate(self) -> None:
        if self.order_ % 4 or self.order_ // 4 < 2:
            raise GroupSpecError(f"dicyclic group needs order 4n with n >= 2, got {self.order_}")

    def order(self) -> int:
        return self.order_

    def to_text(self) -> str:
        return f"Q{self.order_}"


@dataclass(frozen=True)
class Modular(GroupSpec):
    """Modular p-group M_{p^a} = <a, b | a^{p^(a-1)} = b^p = 1, b a b^-1 = a^(p^(a-2) + 1)>."""

    order_: int

    @property
    def prime(self) -> int:
        return factorize(self.order_)[0][0]

    @property
    def exponent(self) -> int:
        return factorize(self.order_)[0][1]

    def validate(self) -> None:
        fac = factorize(self.order_) if self.order_ >= 1 else ()
        if len(fac) != 1:
            raise GroupSpecError(f"modular group needs a prime-power order, got {self.order_}")
        if fac[0][1] < 3:
            raise GroupSpecError(f"modular group needs p^a with a >= 3, got {self.order_}")

    def order(self) -> int:
        return self.order_

    def to_text(self) -> str:
        return f"M{self.order_}"


@dataclass(frozen=True)
class SemidirectZqZp(GroupSpec):
    """Z_q x| Z_p with the generator of Z_p acting as multiplication by k."""

    q: int
    p: int
    k: int

    def validate(self) -> None:
        q, p, k = self.q, self.p, self.k
        if not (is_prime(q) and is_prime(p)) or p == q:
            raise GroupSpecError(f"SD(q,p,k) needs distinct primes q, p; got q={q}, p={p}")
        if (q - 1) % p:
            raise GroupSpecError(f"SD(q,p,k) needs p | q-1; got q={q}, p={p}")
        if multiplicative_order(k, q) != p:
            raise GroupSpecError(f"SD(q,p,k) needs k of multiplicative order p mod q; got k={k}")

    def order(self) -> int:
        return self.p * self.q

    def to_text(self) -> str:
        return f"SD({self.q},{self.p},{self.k})"


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise GroupSpecError(f"symmetric group needs n >= 1, got {self.n}")

    def order(self) -> int:
        out = 1
        for i in range(2, self.n + 1):
            out *= i
        return out

    def to_text(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Alternating(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise GroupSpecError(f"alternating group needs n >= 1, got {self.n}")

    def order(self) -> int:
        full = Symmetric(self.n).order()
        return full if self.n < 2 else full // 2

    def to_text(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class Permutation(GroupSpec):
    """Group generated by permutations of ``{1..degree}``.

    ``generators`` holds each generator as a tuple of cycles, points 1-based.
    ``label`` optionally names the family for the classification oracle.
    """

    generators: tuple[tuple[tuple[int, ...], ...], ...]
    label: str | None = None
    degree: int = field(default=0)

    def __post_init__(self) -> None:
        if not self.degree:
            pts = [x for gen in self.generators for cyc in gen for x in cyc]
            object.__setattr__(self, "degree", max(pts, default=1))

    def validate(self) -> None:
        for gen in self.generators:
            seen: set[int] = set()
            for cyc in gen:
                for x in cyc:
                    if x < 1 or x > self.degree:
                        raise GroupSpecError(f"point {x} outside 1..{self.degree}")
                    if x in seen:
                        raise GroupSpecError(f"point {x} repeated within one generator")
                    seen.add(x)

    def order(self) -> int:
        raise GroupSpecError("order of a permutation group is only known after closure")

    def one_line(self) -> list[tuple[int, ...]]:
        out = []
        for gen in self.generators:
            img = list(range(self.degree))
            for cyc in gen:
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a - 1] = b - 1
            out.append(tuple(img))
        return out

    def to_text(self) -> str:
        body = ";".join("".join("(" + " ".join(map(str, c)) + ")" for c in g) or "()" for g in self.generators)
        tag = f"[{self.label}]" if self.label else ""
        return f"perm{tag}:{body}"


# --------------------------------------------------------------------------
# the group object
# --------------------------------------------------------------------------


class FiniteGroup:
    """A finite group with elements indexed ``0 .. n-1``; index 0 is the identity.

    ``elements`` are hashable representatives and ``rep_mul`` multiplies them.
    The group is treated as immutable; element orders and cyclic subgroups are
    memoised on first use.
    """

    identity = 0

    def __init__(
        self,
        elements: Sequence[Hashable],
        rep_mul: Callable[[Hashable, Hashable], Hashable],
        spec: GroupSpec | None = None,
    ):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate group elements")
        self._rep_mul = rep_mul
        self.spec = spec
        self._table: list[list[int]] | None = None
        self._orders: list[int] | None = None
        self._cyclic: list[frozenset[int]] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        tag = self.spec.to_text() if self.spec is not None else "?"
        return f"FiniteGroup({tag}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[self._rep_mul(self.elements[i], self.elements[j])]

    def table(self) -> list[list[int]]:
        """Full multiplication table (only materialised for small groups)."""
        if self._table is None:
            n = self.order
            if n > TABLE_CACHE_LIMIT:
                raise ValueError(f"refusing to tabulate a group of order {n} > {TABLE_CACHE_LIMIT}")
            self._table = [[self.mul(i, j) for j in range(n)] for i in range(n)]
        return self._table

    def powers(self, x: int) -> list[int]:
        """``[x^1, x^2, ..., x^o(x) = e]``."""
        out = [x]
        y = x
        while y != self.identity:
            y = self.mul(y, x)
            out.append(y)
        return out

    def power(self, x: int, k: int) -> int:
        pw = self.powers(x)
        return pw[(k - 1) % len(pw)]

    def inverse(self, x: int) -> int:
        pw = self.powers(x)
        return pw[-2] if len(pw) > 1 else x

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._cyclic_data()
        return self._orders  # type: ignore[return-value]

    def element_order(self, x: int) -> int:
        return self.element_orders()[x]

    def cyclic_subgroup(self, x: int) -> frozenset[int]:
        if self._cyclic is None:
            self._cyclic_data()
        return self._cyclic[x]  # type: ignore[index]

    def _cyclic_data(self) -> None:
        n = self.order
        cyc: list[frozenset[int] | None] = [None] * n
        for x in range(n):
            if cyc[x] is not None:
                continue
            pw = self.powers(x)
            sub = frozenset(pw)
            m = len(pw)
            # generators of <x> are the coprime powers; they share the subgroup
            for k, y in enumerate(pw, start=1):
                if _gcd(k, m) == 1:
                    cyc[y] = sub
        self._cyclic = cyc  # type: ignore[assignment]
        self._orders = [len(s) for s in cyc]  # type: ignore[arg-type]

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_orders()).items()))

    def cyclic_subgroups(self) -> set[frozenset[int]]:
        return {self.cyclic_subgroup(x) for x in range(self.order)}

    def count_cyclic_subgroups_of_order(self, d: int) -> int:
        return sum(1 for s in self.cyclic_subgroups() if len(s) == d)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mul(i, j) == self.mul(j, i) for i in range(n) for j in range(i + 1, n))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders()


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def order_cap_from_env() -> int:
    raw = os.environ.get("POWERGRAPHS_ORDER_CAP")
    return int(raw) if raw else DEFAULT_ORDER_CAP


def build_group(spec: GroupSpec, cap: int | None = None) -> FiniteGroup:
    """Construct the group named by ``spec``.

    Raises :class:`GroupSpecError` for invalid parameters and
    :class:`OrderCapExceeded` when the group would be larger than ``cap``.
    """
    cap = order_cap_from_env() if cap is None else cap
    spec.validate()
    if not isinstance(spec, Permutation) and spec.order() > cap:
        raise OrderCapExceeded(f"{spec.to_text()} has order {spec.order()} > cap {cap}")

    if isinstance(spec, Cyclic):
        n = spec.n
        return FiniteGroup(range(n), lambda x, y: (x + y) % n, spec)

    if isinstance(spec, DirectProduct):
        parts = [build_group(f, cap) for f in spec.factors]
        elems = list(itertools.product(*(range(p.order) for p in parts)))

        def dp_mul(x, y):
            return tuple(p.mul(a, b) for p, a, b in zip(parts, x, y))

        return FiniteGroup(elems, dp_mul, spec)

    if isinstance(spec, Dihedral):
        n = spec.order_ // 2
        elems = [(i, s) for s in (0, 1) for i in range(n)]

        def d_mul(x, y):
            i, s = x
            j, t = y
            return ((i + (j if s == 0 else -j)) % n, (s + t) % 2)

        return FiniteGroup(elems, d_mul, spec)

    if isinstance(spec, Dicyclic):
        n = spec.order_ // 4
        m = 2 * n
        elems = [(i, s) for s in (0, 1) for i in range(m)]

        def q_mul(x, y):
            i, s = x
            j, t = y
            k = i + (j if s == 0 else -j)
            if s + t == 2:
                return ((k + n) % m, 0)
            return (k % m, s + t)

        return FiniteGroup(elems, q_mul, spec)

    if isinstance(spec, Modular):
        p, a = spec.prime, spec.exponent
        m = p ** (a - 1)
        r = p ** (a - 2) + 1
        rpow = [pow(r, s, m) for s in range(p)]
        elems = [(i, s) for s in range(p) for i in range(m)]

        def m_mul(x, y):
            i, s = x
            j, t = y
            return ((i + j * rpow[s]) % m, (s + t) % p)

        return FiniteGroup(elems, m_mul, spec)

    if isinstance(spec, SemidirectZqZp):
        q, p, k = spec.q, spec.p, spec.k
        kpow = [pow(k, b, q) for b in range(p)]
        elems = [(a, b) for b in range(p) for a in range(q)]

        def sd_mul(x, y):
            a, b = x
            c, d = y
            return ((a + kpow[b] * c) % q, (b + d) % p)

        return FiniteGroup(elems, sd_mul, spec)

    if isinstance(spec, (Symmetric, Alternating)):
        perms = itertools.permutations(range(spec.n))
        if isinstance(spec, Alternating):
            perms = (p for p in perms if _is_even(p))
        return FiniteGroup(list(perms), _compose, spec)

    if isinstance(spec, Permutation):
        return FiniteGroup(close_permutations(spec.one_line(), spec.degree, cap), _compose, spec)

    raise GroupSpecError(f"unknown group family {spec!r}")


def _compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # (x*y)(i) = x(y(i))
    return tuple(x[i] for i in y)


def _is_even(p: Sequence[int]) -> bool:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity += length - 1
    return parity % 2 == 0


def close_permutations(gens: Sequence[tuple[int, ...]], degree: int, cap: int) -> list[tuple[int, ...]]:
    """Breadth-first closure of ``gens`` under composition, identity first."""
    ident = tuple(range(degree))
    seen = {ident}
    out = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > cap:
                    raise OrderCapExceeded(f"permutation closure exceeded order cap {cap}")
                queue.append(y)
    return out


def order_histogram(g: FiniteGroup) -> dict[int, int]:
    return g.order_histogram()


def element_order(g: FiniteGroup, x: int) -> int:
    return g.element_order(x)


def cyclic_subgroup(g: FiniteGroup, x: int) -> frozenset[int]:
    return g.cyclic_subgroup(x)


def count_cyclic_subgroups_of_order(g: FiniteGroup, d: int) -> int:
    """Number of distinct cyclic subgroups of order ``d``."""
    count = g.order_histogram().get(d, 0)
    return count // euler_phi(d)
