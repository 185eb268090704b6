"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is deliberately naive: exhaustive descent over generator
removals and plain set intersections.  Tests compare these answers against
the structural algorithms.
"""

from .core import (
    NumSG, NATURALS, NotContained, contains, format_semigroup, genus,
    intersect_all, is_subset, msg, remove_element,
)
from .chains import NoContainingElement
from .descriptors import Interval, Restricted


def enumerate_between(lo, hi: NumSG, genus_bound=None):
    """Every semigroup containing lo and contained in hi, as a set.

    lo is a NumSG or a plain collection of required elements.  Descends from
    hi by removing minimal generators outside lo; any intermediate semigroup
    is reachable this way because its generators cannot all lie in a smaller
    one.  Without a genus bound lo must be a NumSG, else the descent is
    endless.
    """
    if isinstance(lo, NumSG):
        if not is_subset(lo, hi):
            raise NotContained("%s is not contained in %s"
                               % (format_semigroup(lo), format_semigroup(hi)))
        required = lambda x: contains(lo, x)
    else:
        req = frozenset(lo)
        for x in req:
            if not contains(hi, x):
                raise NotContained("%d is not in %s" % (x, format_semigroup(hi)))
        required = req.__contains__
        assert genus_bound is not None, "unbounded descent from a bare element set"
    out = set()
    stack = [hi]
    seen = {hi}
    while stack:
        s = stack.pop()
        out.add(s)
        if genus_bound is not None and genus(s) >= genus_bound:
            continue
        for x in msg(s):
            if required(x):
                continue
            child = remove_element(s, x)
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return out


def smallest_containing(members, a) -> NumSG:
    """Intersection of the members containing every element of a."""
    hits = [m for m in members if all(contains(m, x) for x in a)]
    if not hits:
        raise NoContainingElement("no member contains {%s}"
                                  % ",".join(map(str, sorted(a))))
    out = intersect_all(hits)
    # the intersection of a finite intersection-closed family is a member,
    # but members here can be any list, so only minimality is guaranteed
    return out


def random_semigroup(rng, genus_max=10) -> NumSG:
    """Random semigroup grown by removing random generators from N."""
    s = NATURALS
    for _ in range(rng.randint(0, genus_max)):
        s = remove_element(s, rng.choice(msg(s)))
    return s


def random_subsemigroup(rng, t: NumSG, steps) -> NumSG:
    """Random semigroup inside t, reached in the given number of removals."""
    s = t
    for _ in range(steps):
        s = remove_element(s, rng.choice(msg(s)))
    return s


def random_interval(rng, genus_max=8, depth_max=5) -> Interval:
    hi = random_semigroup(rng, genus_max)
    lo = random_subsemigroup(rng, hi, rng.randint(0, depth_max))
    return Interval(lo, hi)


def random_restricted(rng, genus_max=8, picks_max=3) -> Restricted:
    t = random_semigroup(rng, genus_max)
    pool = [x for x in msg(t) if x > 0]
    k = rng.randint(0, min(picks_max, len(pool)))
    return Restricted(frozenset(rng.sample(pool, k)), t)


def oracle_members(desc, genus_bound):
    """Member list of an interval or restricted family by raw enumeration."""
    if isinstance(desc, Interval):
        return {s for s in enumerate_between(desc.lo, desc.hi, genus_bound)
                if genus(s) <= genus_bound}
    if isinstance(desc, Restricted):
        return enumerate_between(desc.a, desc.t, genus_bound)
    raise TypeError("no oracle for %r" % (desc,))
