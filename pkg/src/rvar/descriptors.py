"""Descriptors for restricted varieties of numerical semigroups.

A descriptor is a finite, hashable recipe for a (possibly infinite) family of
numerical semigroups that has a maximum element, is closed under intersection,
and is closed under adjoining the Frobenius number restricted to the maximum.
Three base families are supported, plus a descendants view rooted at a member.
"""

from dataclasses import dataclass, field

from .core import NumSG, NotContained, format_semigroup, is_subset, contains


@dataclass(frozen=True)
class Interval:
    """All semigroups between lo and hi inclusive."""

    lo: NumSG
    hi: NumSG

    def __post_init__(self):
        if not is_subset(self.lo, self.hi):
            raise NotContained("%s is not contained in %s"
                               % (format_semigroup(self.lo), format_semigroup(self.hi)))


@dataclass(frozen=True)
class Restricted:
    """All semigroups S with a ⊆ S ⊆ t."""

    a: frozenset
    t: NumSG

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        for x in self.a:
            if not contains(self.t, x):
                raise NotContained("forced element %d is not in %s"
                                   % (x, format_semigroup(self.t)))


@dataclass(frozen=True)
class Generated:
    """The smallest such family with maximum delta containing every member of f.

    Equals all finite intersections of the chains of f's members restricted
    to delta.
    """

    f: tuple = field()
    delta: NumSG = field()

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        for s in self.f:
            if not is_subset(s, self.delta):
                raise NotContained("family member %s is not contained in %s"
                                   % (format_semigroup(s), format_semigroup(self.delta)))


@dataclass(frozen=True)
class Descendants:
    """View of another descriptor, keeping only the descendants of top in its tree.

    Construct through engine.descendants, which validates membership of top.
    """

    base: object
    top: NumSG


def delta_of(desc) -> NumSG:
    """The maximum member of the described family."""
    if isinstance(desc, Interval):
        return desc.hi
    if isinstance(desc, Restricted):
        return desc.t
    if isinstance(desc, Generated):
        return desc.delta
    if isinstance(desc, Descendants):
        return desc.top
    raise TypeError("not a variety descriptor: %r" % (desc,))
