"""Is a pointed group (G, g) an h-amalgamation base?

Two independent answers are available.  The brute-force one walks the
subgroup lattice looking for proper H, K with g in H + K but in neither
summand.  The structural one only looks at the order of g and at the shape
of the matching primary component.  They must always agree;
:func:`enumerate_bases` treats any disagreement as a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Literal

from .groups import (
    Element,
    FinAbGroup,
    PointedGroup,
    abelian_groups_of_order,
    canonical_invariant_factors,
    format_element,
    prime_power_decompose,
    primary_component_group,
)
from .subgroups import Subgroup, all_subgroups, enumeration_bound, BoundExceeded

Method = Literal["bruteforce", "structural", "both"]

ORDER_NOT_PRIME_POWER = "order not a prime power"
COMPONENT_NOT_CYCLIC = "p-component not cyclic"


class DeciderDisagreement(AssertionError):
    """The two deciders returned different answers for the same pointed group."""


@dataclass(frozen=True)
class BaseVerdict:
    is_base: bool
    method: str
    witness: tuple[Subgroup, Subgroup] | None = None
    failed_clause: str | None = None
    p: int | None = None
    n: int | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"is_base": self.is_base, "method": self.method}
        if self.p is not None:
            out["p"] = self.p
            out["n"] = self.n
        if self.failed_clause is not None:
            out["failed_clause"] = self.failed_clause
        if self.witness is not None:
            out["witness"] = {
                name: {
                    "generators": [list(x) for x in S.generators],
                    "elements": [list(x) for x in S.elements],
                }
                for name, S in zip(("H", "K"), self.witness)
            }
        return out

    def detail(self) -> str:
        parts = []
        if self.p is not None:
            parts.append(f"p={self.p} n={self.n}")
        if self.failed_clause is not None:
            parts.append(self.failed_clause)
        if self.witness is not None:
            H, K = self.witness
            parts.append(f"H={H} K={K}")
        return "; ".join(parts)


def witness_is_valid(pg: PointedGroup, H: Subgroup, K: Subgroup) -> bool:
    """g in H + K, g not in H, g not in K, both proper."""
    G, g = pg.group, pg.g
    if H.parent != G or K.parent != G:
        return False
    if H.order == G.order or K.order == G.order or g in H or g in K:
        return False
    return any(G.sub(g, h) in K for h in H.elements)


def is_base_bruteforce(pg: PointedGroup, bound: int | None = None,
                       subgroups: list[Subgroup] | None = None) -> BaseVerdict:
    """Search every pair of proper subgroups for a violation of the sum property.

    Only the direction "g in H + K implies g in H or g in K" needs checking.
    A violating pair never contains g in either summand, so those are the only
    candidates; pairs are taken unordered in the lattice's canonical order.
    """
    G, g = pg.group, pg.g
    if subgroups is None:
        subgroups = all_subgroups(G, bound)
    candidates = [S for S in subgroups if g not in S]
    for i, H in enumerate(candidates):
        shifted = [G.sub(g, h) for h in H.elements]
        for K in candidates[i:]:
            if any(x in K for x in shifted):
                return BaseVerdict(False, "bruteforce", witness=(H, K))
    return BaseVerdict(True, "bruteforce")


def is_prime_power_order_necessary(pg: PointedGroup) -> bool:
    return prime_power_decompose(pg.group.element_order(pg.g)) is not None


def is_base_structural(pg: PointedGroup) -> BaseVerdict:
    pp = prime_power_decompose(pg.group.element_order(pg.g))
    if pp is None:
        return BaseVerdict(False, "structural", failed_clause=ORDER_NOT_PRIME_POWER)
    p, _ = pp
    factors = canonical_invariant_factors(primary_component_group(pg.group, p))
    if len(factors) != 1:
        return BaseVerdict(False, "structural", failed_clause=COMPONENT_NOT_CYCLIC)
    _, n = prime_power_decompose(factors[0])
    return BaseVerdict(True, "structural", p=p, n=n)


def check_base(pg: PointedGroup, method: Method = "both", bound: int | None = None,
           subgroups: list[Subgroup] | None = None) -> BaseVerdict:
    """Run one or both deciders; with ``both`` the verdicts are merged and must agree."""
    if method == "structural":
        return is_base_structural(pg)
    if method == "bruteforce":
        return is_base_bruteforce(pg, bound, subgroups)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    s = is_base_structural(pg)
    b = is_base_bruteforce(pg, bound, subgroups)
    if s.is_base != b.is_base:
        raise DeciderDisagreement(
            f"deciders disagree on {pg}: bruteforce says {b.is_base} ({b.detail()}), "
            f"structural says {s.is_base} ({s.detail()})"
        )
    return BaseVerdict(s.is_base, "both", witness=b.witness,
                       failed_clause=s.failed_clause, p=s.p, n=s.n)


@dataclass(frozen=True)
class BaseRow:
    group: FinAbGroup
    g: Element
    verdict: BaseVerdict

    @property
    def is_base(self) -> bool:
        return self.verdict.is_base

    def to_json(self) -> dict[str, Any]:
        return {"group": str(self.group), "g": list(self.g), **self.verdict.to_json()}

    def csv_fields(self) -> list[str]:
        return [str(self.group), format_element(self.g), str(self.is_base).lower(), self.verdict.detail()]


def groups_up_to(max_order: int) -> list[FinAbGroup]:
    """One group per isomorphism class of order 2..max_order, ordered by invariant factors."""
    out = [G for n in range(2, max_order + 1) for G in abelian_groups_of_order(n)]
    return sorted(out, key=lambda G: (G.order, canonical_invariant_factors(G)))


def iter_bases(max_order: int, method: Method = "both", bound: int | None = None) -> Iterator[BaseRow]:
    if method != "structural" and max_order > enumeration_bound(bound):
        raise BoundExceeded(
            f"max order {max_order} exceeds the enumeration bound {enumeration_bound(bound)}"
        )
    for G in groups_up_to(max_order):
        lattice = all_subgroups(G, bound) if method != "structural" else None
        for g in G.elements():
            if not any(g):
                continue
            pg = PointedGroup(G, g)
            yield BaseRow(G, g, check_base(pg, method, bound, lattice))


def enumerate_bases(max_order: int, method: Method = "both", bound: int | None = None) -> list[BaseRow]:
    return list(iter_bases(max_order, method, bound))
