"""Homomorphisms between finite abelian groups, given by images of generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .groups import Element, FinAbGroup, PointedGroup
from .literals import parse_group
from .subgroups import Subgroup, from_elements, generate, require_bound


@dataclass(frozen=True)
class Homomorphism:
    """``images[i]`` is the image of the i-th standard generator of ``domain``.

    Build through :func:`make_hom`, which checks well-definedness.
    """

    domain: FinAbGroup
    codomain: FinAbGroup
    images: tuple[Element, ...]

    def __call__(self, x: Sequence[int]) -> Element:
        return apply(self, x)

    def __str__(self) -> str:
        return f"{self.domain} -> {self.codomain} {list(self.images)}"


def make_hom(domain: FinAbGroup, codomain: FinAbGroup, images: Sequence[Sequence[int]]) -> Homomorphism:
    images = tuple(tuple(int(c) for c in y) for y in images)
    if len(images) != domain.rank:
        raise ValueError(f"{domain} has {domain.rank} generators but {len(images)} images were given")
    images = tuple(codomain.element(y) for y in images)
    for i, (m, y) in enumerate(zip(domain.moduli, images)):
        if any(codomain.scalar_mul(m, y)):
            raise ValueError(
                f"not well-defined on generator {i}: {m} * e_{i} = 0 in {domain} "
                f"but {m} * {y} != 0 in {codomain}"
            )
    return Homomorphism(domain, codomain, images)


def identity(G: FinAbGroup) -> Homomorphism:
    return Homomorphism(G, G, tuple(G.basis()))


def zero_hom(domain: FinAbGroup, codomain: FinAbGroup) -> Homomorphism:
    return Homomorphism(domain, codomain, (codomain.zero,) * domain.rank)


def apply(f: Homomorphism, x: Sequence[int]) -> Element:
    x = f.domain.check(x)
    C = f.codomain
    out = C.zero
    for xi, y in zip(x, f.images):
        if xi:
            out = C.add(out, C.scalar_mul(xi, y))
    return out


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """``g . f``: apply f first."""
    if f.codomain != g.domain:
        raise ValueError(f"cannot compose: {f.codomain} is not {g.domain}")
    return Homomorphism(f.domain, g.codomain, tuple(apply(g, y) for y in f.images))


def kernel(f: Homomorphism, bound: int | None = None) -> Subgroup:
    require_bound(f.domain, bound, "kernel computation")
    C0 = f.codomain.zero
    return from_elements(f.domain, [x for x in f.domain.elements() if apply(f, x) == C0])


def image(f: Homomorphism) -> Subgroup:
    return generate(f.codomain, f.images)


def push_forward(f: Homomorphism, S: Subgroup) -> Subgroup:
    if S.parent != f.domain:
        raise ValueError(f"subgroup of {S.parent} cannot be pushed along a map out of {f.domain}")
    return from_elements(f.codomain, {apply(f, s) for s in S.elements})


def is_pointed_hom(f: Homomorphism, src: PointedGroup, dst: PointedGroup) -> bool:
    if f.domain != src.group or f.codomain != dst.group:
        raise ValueError("homomorphism does not map between the given pointed groups")
    return apply(f, src.g) == dst.g


@dataclass(frozen=True)
class Span:
    """Two pointed homomorphisms out of the same pointed group.

    ``left``: (G, g) -> (K, k) and ``right``: (G, g) -> (L, l).
    """

    source: PointedGroup
    left: Homomorphism
    right: Homomorphism
    left_target: PointedGroup
    right_target: PointedGroup

    def __post_init__(self):
        for name, f, tgt in (("left", self.left, self.left_target), ("right", self.right, self.right_target)):
            if f.domain != self.source.group:
                raise ValueError(f"{name} leg starts at {f.domain}, source is {self.source.group}")
            if not is_pointed_hom(f, self.source, tgt):
                raise ValueError(
                    f"{name} leg is not pointed: it sends g to {apply(f, self.source.g)}, "
                    f"target point is {tgt.g}"
                )

    @classmethod
    def build(cls, source: PointedGroup, left: Homomorphism, right: Homomorphism) -> Span:
        """Span whose target points are the images of the source point."""
        return cls(
            source,
            left,
            right,
            PointedGroup(left.codomain, apply(left, source.g)),
            PointedGroup(right.codomain, apply(right, source.g)),
        )

    def swapped(self) -> Span:
        return Span(self.source, self.right, self.left, self.right_target, self.left_target)


def span_from_json(data: dict[str, Any]) -> Span:
    """Read the span-file schema.

    ``{"source": {"group", "g"}, "left": {"codomain", "k", "images"},
    "right": {"codomain", "l", "images"}}`` with groups as literals and
    elements as coordinate arrays.
    """
    try:
        src, left, right = data["source"], data["left"], data["right"]
        G = parse_group(src["group"])
        K = parse_group(left["codomain"])
        L = parse_group(right["codomain"])
        source = PointedGroup(G, G.check(_coords(src["g"])))
        f = make_hom(G, K, [_coords(y) for y in left["images"]])
        h = make_hom(G, L, [_coords(y) for y in right["images"]])
        k = PointedGroup(K, K.check(_coords(left["k"])))
        l = PointedGroup(L, L.check(_coords(right["l"])))
    except KeyError as e:
        raise ValueError(f"span file is missing field {e.args[0]!r}") from None
    except TypeError as e:
        raise ValueError(f"malformed span file: {e}") from None
    return Span(source, f, h, k, l)


def span_to_json(span: Span) -> dict[str, Any]:
    return {
        "source": {"group": str(span.source.group), "g": list(span.source.g)},
        "left": {
            "codomain": str(span.left.codomain),
            "k": list(span.left_target.g),
            "images": [list(y) for y in span.left.images],
        },
        "right": {
            "codomain": str(span.right.codomain),
            "l": list(span.right_target.g),
            "images": [list(y) for y in span.right.images],
        },
    }


def _coords(v) -> tuple[int, ...]:
    if isinstance(v, int):
        return (v,)
    return tuple(int(c) for c in v)
