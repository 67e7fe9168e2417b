"""Completing a span of pointed homomorphisms to a commuting square.

Given (K, k) <-f- (G, g) -h-> (L, l), the universal completion in abelian
groups is D = (K + L) / H with H = {(f(a), -h(a)) : a in G}, with
f'(x) = [(x, 0)] and h'(y) = [(0, y)].  The square is a square of pointed
groups exactly when d = [(k, 0)] is nonzero, which in turn happens exactly
when l is not in h(ker f) and k is not in f(ker h).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .groups import Element, FinAbGroup, PointedGroup
from .hom import Homomorphism, Span, apply, kernel, make_hom
from .snf import QuotientMap, quotient_invariants


@dataclass(frozen=True)
class KernelWitness:
    """An element a of G that blocks amalgamation.

    ``clause == "l in h(ker f)"``: f(a) = 0 and h(a) = l.
    ``clause == "k in f(ker h)"``: h(a) = 0 and f(a) = k.
    """

    element: Element
    clause: str

    def to_json(self) -> dict[str, Any]:
        return {"element": list(self.element), "clause": self.clause}


def amalgamability_condition(span: Span) -> tuple[bool, KernelWitness | None]:
    f, h = span.left, span.right
    k, l = span.left_target.g, span.right_target.g
    for a in kernel(f).elements:
        if apply(h, a) == l:
            return False, KernelWitness(a, "l in h(ker f)")
    for a in kernel(h).elements:
        if apply(f, a) == k:
            return False, KernelWitness(a, "k in f(ker h)")
    return True, None


def relation_generators(span: Span) -> list[Element]:
    """(f(e_i), -h(e_i)) for each standard generator e_i of the source."""
    L = span.right.codomain
    return [fy + L.neg(hy) for fy, hy in zip(span.left.images, span.right.images)]


@dataclass(frozen=True)
class AmalgamResult:
    amalgamable: bool
    quotient: FinAbGroup
    left_map: Homomorphism
    right_map: Homomorphism
    d: Element
    witness: KernelWitness | None = None

    @property
    def D(self) -> PointedGroup | None:
        return PointedGroup(self.quotient, self.d) if self.amalgamable else None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "amalgamable": self.amalgamable,
            "D": {"invariant_factors": list(self.quotient.moduli)},
            "d": list(self.d),
            "left_images": [list(y) for y in self.left_map.images],
            "right_images": [list(y) for y in self.right_map.images],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def pushout(span: Span) -> AmalgamResult:
    K, L = span.left.codomain, span.right.codomain
    KL = K.direct_sum(L)
    q: QuotientMap = quotient_invariants(KL.moduli, relation_generators(span))
    D = FinAbGroup(q.invariant_factors)

    left_map = make_hom(K, D, [q.project(x + L.zero) for x in K.basis()])
    right_map = make_hom(L, D, [q.project(K.zero + y) for y in L.basis()])
    d = q.project(span.left_target.g + L.zero)

    amalgamable = any(d)
    witness = None
    if not amalgamable:
        _, witness = amalgamability_condition(span)
    return AmalgamResult(amalgamable, D, left_map, right_map, d, witness)


def verify_square(span: Span, result: AmalgamResult) -> bool:
    """Exhaustively check that the result is a commuting square of pointed groups."""
    D = result.quotient
    d = result.d
    if d not in D or not any(d):
        return False
    fp, hp = result.left_map, result.right_map
    if fp.domain != span.left.codomain or hp.domain != span.right.codomain:
        return False
    if fp.codomain != D or hp.codomain != D:
        return False
    try:
        make_hom(fp.domain, D, fp.images)
        make_hom(hp.domain, D, hp.images)
    except ValueError:
        return False
    if apply(fp, span.left_target.g) != d or apply(hp, span.right_target.g) != d:
        return False
    return all(
        apply(fp, apply(span.left, x)) == apply(hp, apply(span.right, x))
        for x in span.source.group.elements()
    )
