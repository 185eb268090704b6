"""Chains between nested semigroups and minimal generating systems.

The chain from S to T adjoins max(T \\ current) until T is reached.  Relative
to a variety descriptor, every monoid expressible as an intersection of
members admits a unique minimal generating system; this module computes it
for the three base descriptor families.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import core
from .core import (
    NumSG, DomainError, NotContained, add_element, contains, elements,
    format_semigroup, from_generators, intersect_all, is_subset, msg,
    restricted_frobenius, union_with_tail,
)
from .descriptors import Interval, Restricted, Generated, delta_of


class NotInDelta(DomainError):
    pass


class NotInVariety(DomainError):
    pass


class NotNumerical(DomainError):
    """The generated monoid has infinite complement (gcd of generators != 1)."""


class NoContainingElement(DomainError):
    pass


@dataclass(frozen=True)
class ChainRec:
    """links[0] ⊊ links[1] ⊊ ... ⊊ links[-1]; fill_values[i] joins links[i] to links[i+1]."""

    links: tuple
    fill_values: tuple


def chain_to(s: NumSG, t: NumSG) -> ChainRec:
    """The chain from s up to t; single link when s == t."""
    if not is_subset(s, t):
        raise NotContained("%s is not contained in %s"
                           % (format_semigroup(s), format_semigroup(t)))
    links = [s]
    fills = []
    cur = s
    while cur != t:
        f = restricted_frobenius(cur, t)
        # fills strictly decrease: each is the current maximum of t \ cur
        assert not fills or f < fills[-1]
        cur = add_element(cur, f)
        links.append(cur)
        fills.append(f)
    return ChainRec(tuple(links), tuple(fills))


def chain_family(f, delta: NumSG) -> set:
    """Union of the chains of all members of f restricted to delta."""
    out = set()
    for s in f:
        if not is_subset(s, delta):
            raise NotContained("family member %s is not contained in %s"
                               % (format_semigroup(s), format_semigroup(delta)))
        out.update(chain_to(s, delta).links)
    return out


@lru_cache(maxsize=4096)
def _chain_members(desc: Generated) -> tuple:
    return tuple(sorted(chain_family(desc.f, desc.delta), key=NumSG.sort_key))


def _first_missing(m: NumSG, s: NumSG) -> int:
    """Smallest element of m outside s; requires m ⊄ s."""
    for e in elements(m, max(m.conductor, s.conductor)):
        if not contains(s, e):
            return e
    raise AssertionError("no missing element: %s ⊆ %s"
                         % (format_semigroup(m), format_semigroup(s)))


def is_member(desc, s: NumSG) -> bool:
    """Whether s belongs to the family described by a base descriptor."""
    if isinstance(desc, Interval):
        return is_subset(desc.lo, s) and is_subset(s, desc.hi)
    if isinstance(desc, Restricted):
        return all(contains(s, x) for x in desc.a) and is_subset(s, desc.t)
    if isinstance(desc, Generated):
        if s == desc.delta:
            return True
        if not is_subset(s, desc.delta):
            return False
        # the intersection of all chain members containing s is the smallest
        # member-expressible superset; s is a member iff it equals s
        containing = [c for c in _chain_members(desc) if is_subset(s, c)]
        if not containing:
            return False
        return intersect_all(containing) == s
    raise TypeError("not a base variety descriptor: %r" % (desc,))


def rmonoid_generated(desc, a) -> NumSG:
    """Smallest member-intersection containing the set a.

    For Interval and Generated descriptors the result is always a numerical
    semigroup.  For Restricted descriptors with gcd(forced ∪ a) != 1 the
    monoid has infinite complement and NotNumerical is raised.
    """
    a = frozenset(a)
    delta = delta_of(desc)
    for x in a:
        if x < 0 or not contains(delta, x):
            raise NotInDelta("%d is not in %s" % (x, format_semigroup(delta)))
    if isinstance(desc, Interval):
        return from_generators(sorted(set(msg(desc.lo)) | {x for x in a if x}))
    if isinstance(desc, Restricted):
        gens = sorted({x for x in desc.a | a if x})
        if not gens:
            raise NotNumerical("the trivial monoid {0} is not a numerical semigroup")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise NotNumerical("generators %s have gcd %d"
                               % (",".join(map(str, gens)), d))
        return from_generators(gens)
    if isinstance(desc, Generated):
        parts = []
        for s in desc.f:
            if all(contains(s, x) for x in a):
                parts.append(s)
            else:
                x_s = min(x for x in a if not contains(s, x))
                parts.append(union_with_tail(s, desc.delta, x_s))
        if not parts:
            return delta
        return intersect_all(parts)
    raise TypeError("not a base variety descriptor: %r" % (desc,))


def minimal_rsystem(desc, m: NumSG) -> frozenset:
    """The unique minimal set B with rmonoid_generated(desc, B) == m.

    m must be a member.  Interval and Restricted families reduce to the
    minimal generators outside the forced part; Generated families take the
    first element of m missing from each family member not containing m,
    then verify minimality by dropping each candidate in turn.
    """
    if not is_member(desc, m):
        raise NotInVariety("%s is not a member" % format_semigroup(m))
    if isinstance(desc, Interval):
        return frozenset(x for x in msg(m) if not contains(desc.lo, x))
    if isinstance(desc, Restricted):
        return frozenset(x for x in msg(m) if x not in desc.a)
    b = set()
    for s in desc.f:
        if not is_subset(m, s):
            b.add(_first_missing(m, s))
    b = frozenset(b)
    assert rmonoid_generated(desc, b) == m
    for x in b:
        assert rmonoid_generated(desc, b - {x}) != m
    return b


def rrange(desc, m: NumSG) -> int:
    return len(minimal_rsystem(desc, m))


def minimal_system_from_members(members, m: NumSG) -> frozenset:
    """Minimal generating system of member m relative to an explicit finite family.

    Greedy reduction of msg(m): drop x whenever the remaining set still pins
    m as the intersection of all containing members.  The outcome is the
    unique minimal system, so the scan order does not matter.
    """

    def generated(b):
        parts = [c for c in members if all(contains(c, x) for x in b)]
        if not parts:
            raise NoContainingElement("no member contains %s" % sorted(b))
        return intersect_all(parts)

    keep = set(msg(m))
    assert generated(keep) == m
    for x in sorted(keep, reverse=True):
        trial = keep - {x}
        if generated(trial) == m:
            keep = trial
    return frozenset(keep)
