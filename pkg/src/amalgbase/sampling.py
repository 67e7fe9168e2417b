"""Random groups, homomorphisms and spans for sweeps and tests."""

from __future__ import annotations

import random
from math import gcd

from .groups import FinAbGroup, PointedGroup, abelian_groups_of_order
from .hom import Homomorphism, Span, apply, make_hom


def random_group(rng: random.Random, max_order: int, min_order: int = 2) -> FinAbGroup:
    """A random group of order in [min_order, max_order], sometimes in a non-primary factored form."""
    n = rng.randint(min_order, max_order)
    G = rng.choice(abelian_groups_of_order(n))
    moduli = list(G.moduli)
    # merge coprime factors now and then so non-canonical coordinates get exercised
    if len(moduli) >= 2 and rng.random() < 0.5:
        i, j = rng.sample(range(len(moduli)), 2)
        a, b = moduli[i], moduli[j]
        if gcd(a, b) == 1:
            moduli = [m for t, m in enumerate(moduli) if t not in (i, j)] + [a * b]
    rng.shuffle(moduli)
    return FinAbGroup(tuple(moduli))


def random_hom(rng: random.Random, domain: FinAbGroup, codomain: FinAbGroup) -> Homomorphism:
    """Uniform over Hom(domain, codomain): each generator goes to a random m_i-torsion element."""
    images = []
    for m in domain.moduli:
        # the m-torsion of Z/c is generated by c / gcd(m, c)
        coords = []
        for c in codomain.moduli:
            step = c // gcd(m, c)
            coords.append(step * rng.randrange(c // step))
        images.append(tuple(coords))
    return make_hom(domain, codomain, images)


def random_span(rng: random.Random, max_source_order: int = 16, max_target_order: int = 16,
                attempts: int = 1000) -> Span:
    """A random pointed span; legs that kill the source point are resampled."""
    for _ in range(attempts):
        G = random_group(rng, max_source_order)
        g = tuple(rng.randrange(m) for m in G.moduli)
        if not any(g):
            continue
        source = PointedGroup(G, g)
        K = random_group(rng, max_target_order)
        L = random_group(rng, max_target_order)
        f = random_hom(rng, G, K)
        h = random_hom(rng, G, L)
        if any(apply(f, g)) and any(apply(h, g)):
            return Span.build(source, f, h)
    raise RuntimeError("could not sample a pointed span")
