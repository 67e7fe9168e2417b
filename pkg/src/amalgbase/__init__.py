"""h-amalgamation bases of pointed finite abelian groups.

A pointed group is a finite abelian group with a distinguished nonzero
element; maps between pointed groups must send the point to the point.
This package decides which pointed groups are h-amalgamation bases, builds
the amalgam of a span by a quotient of a direct sum, and tabulates bases of
small order.
"""

from .amalgam import AmalgamResult, amalgamability_condition, pushout, verify_square
from .decide import (
    BaseVerdict,
    DeciderDisagreement,
    check_base,
    enumerate_bases,
    is_base_bruteforce,
    is_base_structural,
    is_prime_power_order_necessary,
)
from .groups import (
    FinAbGroup,
    PointedGroup,
    abelian_groups_of_order,
    canonical_invariant_factors,
    prime_power_decompose,
)
from .hom import Homomorphism, Span, apply, compose, image, is_pointed_hom, kernel, make_hom, push_forward
from .literals import parse_element, parse_group
from .snf import IntMatrix, SnfResult, quotient_invariants, smith_normal_form
from .subgroups import (
    BoundExceeded,
    Subgroup,
    all_subgroups,
    contains,
    generate,
    is_proper,
    is_trivial,
    primary_component,
    subgroup_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
