"""Exact arithmetic for numerical semigroups and their restricted families.

The library models intersection-closed families of numerical semigroups
that sit below a fixed maximum and stay closed under adjoining the largest
missing element.  Families are named by descriptors (interval, restricted,
generated-by-chains), walked as trees, enumerated genus by genus, and
cross-checked against brute-force oracles.
"""

from .core import (
    NumSG, DomainError, ParseError, EmptyGenerators, InvalidGenerator,
    GcdNotOne, NotMember, NotMinimalGenerator, AlreadyMember, NotClosed,
    NotContained, EqualSemigroups, CapacityExceeded, NATURALS,
    from_generators, contains, frobenius, genus, multiplicity, elements,
    msg, intersect, intersect_all, is_subset, remove_element, add_element,
    union_with_tail, restricted_frobenius, parse_semigroup, format_semigroup,
)
from .descriptors import Interval, Restricted, Generated, Descendants, delta_of
from .chains import (
    ChainRec, NotInDelta, NotInVariety, NotNumerical, NoContainingElement,
    chain_to, chain_family, is_member, rmonoid_generated, minimal_rsystem,
    rrange, minimal_system_from_members,
)
from .closures import (
    LD, PL, KINDS, NotCofinite, variety_closure, restricted_closure,
    minimal_vsystem, minimal_system_via,
)
from .engine import (
    DEFAULT_GENUS_BOUND, InfiniteVariety, RTreeNode, member, build_tree,
    tree_vertices, members_of, genus_level, is_pseudo_variety, descendants,
    restrict_variety, check_rvariety_axioms, children,
)
from .oracle import (
    enumerate_between, smallest_containing, oracle_members,
    random_semigroup, random_subsemigroup, random_interval, random_restricted,
)

__version__ = "0.1.0"
