"""Finite abelian groups written as products of cyclic groups.

A group is kept in the factored form the caller gave it (``Z/4 x Z/2`` stays
that way); elements are plain tuples of residues in those coordinates.
Canonical forms are computed on request, never applied silently.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

from .snf import IntMatrix, smith_normal_form

Element = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        for m in self.moduli:
            if m < 2:
                raise ValueError(f"every modulus must be >= 2, got {m}")

    @classmethod
    def cyclic(cls, *moduli: int) -> FinAbGroup:
        return cls(tuple(moduli))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def __str__(self) -> str:
        return " x ".join(f"Z/{m}" for m in self.moduli) if self.moduli else "0"

    def elements(self) -> Iterator[Element]:
        """All elements, in lexicographic order of coordinates."""
        return itertools.product(*(range(m) for m in self.moduli))

    def basis(self) -> list[Element]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def element(self, coords: Sequence[int]) -> Element:
        """Reduce an arbitrary integer tuple into this group."""
        if len(coords) != self.rank:
            raise ValueError(
                f"element has {len(coords)} coordinates but {self} has rank {self.rank}"
            )
        return tuple(int(c) % m for c, m in zip(coords, self.moduli))

    def check(self, x: Sequence[int]) -> Element:
        """Return ``x`` as a tuple, refusing anything that is not already reduced."""
        x = tuple(x)
        if len(x) != self.rank:
            raise ValueError(f"element {x} has rank {len(x)}, {self} has rank {self.rank}")
        for c, m in zip(x, self.moduli):
            if not 0 <= c < m:
                raise ValueError(f"element {x} is not reduced modulo {self.moduli}")
        return x

    def __contains__(self, x) -> bool:
        try:
            self.check(x)
        except (ValueError, TypeError):
            return False
        return True

    def _same_rank(self, *xs: Sequence[int]):
        for x in xs:
            if len(x) != self.rank:
                raise ValueError(f"rank mismatch: {tuple(x)} in {self}")

    def add(self, x: Element, y: Element) -> Element:
        self._same_rank(x, y)
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        self._same_rank(x, y)
        return tuple((a - b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        self._same_rank(x)
        return tuple(-a % m for a, m in zip(x, self.moduli))

    def scalar_mul(self, n: int, x: Element) -> Element:
        self._same_rank(x)
        return tuple(n * a % m for a, m in zip(x, self.moduli))

    def element_order(self, x: Element) -> int:
        self._same_rank(x)
        return math.lcm(*(m // math.gcd(m, a) for a, m in zip(x, self.moduli))) if x else 1

    def direct_sum(self, other: FinAbGroup) -> FinAbGroup:
        return FinAbGroup(self.moduli + other.moduli)


@dataclass(frozen=True)
class PointedGroup:
    """A group with a distinguished nonzero element."""

    group: FinAbGroup
    g: Element

    def __post_init__(self):
        object.__setattr__(self, "g", self.group.check(self.g))
        if not any(self.g):
            raise ValueError("g must be nonzero (T*_ab requires g != 0)")

    def __str__(self) -> str:
        return f"({self.group}, {format_element(self.g)})"


def format_element(x: Element) -> str:
    return str(x[0]) if len(x) == 1 else "(" + ",".join(map(str, x)) + ")"


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``n == p**e`` and ``e >= 1``, or None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


def p_valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def canonical_invariant_factors(G: FinAbGroup) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of G; equal lists iff isomorphic."""
    if G.rank == 0:
        return []
    res = smith_normal_form(IntMatrix.diagonal(G.moduli))
    return [d for d in res.invariants if d != 1]


def elementary_divisors(G: FinAbGroup) -> list[int]:
    """Prime-power cyclic factors of G, sorted."""
    out = []
    for m in G.moduli:
        out += [p**e for p, e in factorize(m).items()]
    return sorted(out)


def primary_component_group(G: FinAbGroup, p: int) -> FinAbGroup:
    """Isomorphism type of the p-primary component, as a product of cyclic p-groups."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FinAbGroup(tuple(p ** p_valuation(m, p) for m in G.moduli if m % p == 0))


def is_isomorphic(G: FinAbGroup, H: FinAbGroup) -> bool:
    return canonical_invariant_factors(G) == canonical_invariant_factors(H)


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, largest parts first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def abelian_groups_of_order(n: int) -> list[FinAbGroup]:
    """One representative per isomorphism class, in primary-decomposition form."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    per_prime = [
        [tuple(p**k for k in part) for part in integer_partitions(e)]
        for p, e in sorted(factorize(n).items())
    ]
    return [
        FinAbGroup(reduce(lambda a, b: a + b, choice, ()))
        for choice in itertools.product(*per_prime)
    ]
