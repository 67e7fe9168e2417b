"""Subgroups of finite abelian groups, carried with their full element sets.

The groups here are small, so every subgroup stores its sorted element list;
that list is the subgroup's identity.  Enumeration of the whole lattice is
refused above a configurable order bound (``AMALGBASE_BOUND`` or the
``bound=`` argument).
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import Element, FinAbGroup, format_element, is_prime, p_valuation

DEFAULT_BOUND = 256
BOUND_ENV = "AMALGBASE_BOUND"


class BoundExceeded(RuntimeError):
    """A group is too large for exhaustive enumeration."""


def enumeration_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BOUND_ENV} must be an integer, got {raw!r}") from None


def require_bound(G: FinAbGroup, bound: int | None = None, what: str = "enumeration"):
    limit = enumeration_bound(bound)
    if G.order > limit:
        raise BoundExceeded(
            f"{what} refused: |{G}| = {G.order} exceeds the enumeration bound {limit} "
            f"(raise it with --bound or {BOUND_ENV})"
        )


@dataclass(frozen=True)
class Subgroup:
    parent: FinAbGroup
    generators: tuple[Element, ...] = field(compare=False)
    elements: tuple[Element, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._members

    def __str__(self) -> str:
        return "<" + ", ".join(format_element(x) for x in self.generators) + ">"


def _check_parent(G: FinAbGroup, xs: Iterable[Sequence[int]]) -> list[Element]:
    return [G.check(x) for x in xs]


def _close(G: FinAbGroup, seed: set[Element], gens: Sequence[Element]) -> set[Element]:
    """Saturate ``seed`` (already a subgroup) under adding each generator."""
    elems = set(seed)
    for x in gens:
        if x in elems:
            continue
        # H + <x> = union of cosets H + k x
        multiples = [G.zero]
        y = x
        while y not in elems:
            multiples.append(y)
            y = G.add(y, x)
        elems = {G.add(h, kx) for h in elems for kx in multiples}
    return elems


def _make(G: FinAbGroup, gens: Sequence[Element], elems: Iterable[Element]) -> Subgroup:
    return Subgroup(G, tuple(gens), tuple(sorted(elems)))


def generate(G: FinAbGroup, gens: Iterable[Sequence[int]] = ()) -> Subgroup:
    """The subgroup generated by ``gens``."""
    gens = _check_parent(G, gens)
    return _make(G, gens, _close(G, {G.zero}, gens))


def trivial_subgroup(G: FinAbGroup) -> Subgroup:
    return _make(G, (), [G.zero])


def whole_group(G: FinAbGroup) -> Subgroup:
    return _make(G, tuple(G.basis()), G.elements())


def from_elements(G: FinAbGroup, elems: Iterable[Sequence[int]]) -> Subgroup:
    """Wrap an element set already known to be closed, choosing generators greedily."""
    elems = sorted(set(_check_parent(G, elems)))
    gens: list[Element] = []
    span = {G.zero}
    for x in elems:
        if x not in span:
            gens.append(x)
            span = _close(G, span, [x])
    if span != set(elems):
        raise ValueError("element set is not a subgroup")
    return Subgroup(G, tuple(gens), tuple(elems))


def all_subgroups(G: FinAbGroup, bound: int | None = None) -> list[Subgroup]:
    """Every subgroup of G exactly once, sorted by (order, element list)."""
    require_bound(G, bound, "subgroup enumeration")
    everything = list(G.elements())
    trivial = trivial_subgroup(G)
    found: dict[tuple[Element, ...], Subgroup] = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            members = set(H.elements)
            skip = set(members)
            for x in everything:
                if x in skip:
                    continue
                elems = _close(G, members, [x])
                key = tuple(sorted(elems))
                if key not in found:
                    S = Subgroup(G, H.generators + (x,), key)
                    found[key] = S
                    nxt.append(S)
                # every element of x + H extends H to the same subgroup
                skip.update(G.add(x, h) for h in H.elements)
        frontier = nxt
    return sorted(found.values(), key=lambda S: (S.order, S.elements))


def subgroup_sum(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent != K.parent:
        raise ValueError(f"subgroups live in different groups: {H.parent} vs {K.parent}")
    G = H.parent
    elems = {G.add(h, k) for h in H.elements for k in K.elements}
    return _make(G, H.generators + K.generators, elems)


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent != K.parent:
        raise ValueError(f"subgroups live in different groups: {H.parent} vs {K.parent}")
    return from_elements(H.parent, [x for x in H.elements if x in K])


def contains(S: Subgroup, x: Sequence[int]) -> bool:
    x = S.parent.check(x)
    i = bisect_left(S.elements, x)
    return i < len(S.elements) and S.elements[i] == x


def is_proper(S: Subgroup) -> bool:
    return S.order < S.parent.order


def is_trivial(S: Subgroup) -> bool:
    return S.order == 1


def is_subgroup_of(H: Subgroup, K: Subgroup) -> bool:
    return H.parent == K.parent and all(x in K for x in H.elements)


def primary_component(G: FinAbGroup, p: int) -> Subgroup:
    """Elements of p-power order: the unique maximal p-subgroup of G."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    gens = []
    for i, m in enumerate(G.moduli):
        if m % p == 0:
            cofactor = m // p ** p_valuation(m, p)
            gens.append(tuple(cofactor if j == i else 0 for j in range(G.rank)))
    return generate(G, gens)
