"""Closure operators for the two shifted-addition families.

A semigroup is in the "ld" family when a + b - 1 stays inside for all
nonzero members a, b, and in the "pl" family when a + b + 1 does.  Both
families are intersection-closed and contain N, so every set of positive
integers has a smallest family member containing it: its closure.
"""

from .core import (
    NumSG, DomainError, EmptyGenerators, InvalidGenerator, CapacityExceeded,
    NotClosed, NotContained, MAX_SIEVE, NATURALS, _canon, contains, elements,
    format_semigroup, intersect, msg,
)

LD = "ld"
PL = "pl"
KINDS = (LD, PL)
_OFFSETS = {LD: -1, PL: 1}


class NotCofinite(DomainError):
    """The closure never settles into a full tail of integers."""


def _offset(kind):
    try:
        return _OFFSETS[kind]
    except KeyError:
        raise DomainError("unknown closure kind %r (expected one of %s)"
                          % (kind, "/".join(KINDS))) from None


def variety_closure(kind, gens) -> NumSG:
    """Smallest semigroup of the given kind containing gens.

    Saturates membership over a window [0, B]: any element is derivable
    from strictly smaller ones, so one increasing sweep per window is
    exact.  The window doubles until the closure shows a tail that is
    certified complete (conductor c with 2c <= B).
    """
    off = _offset(kind)
    gens = list(gens)
    if not gens:
        raise EmptyGenerators("no generators given")
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise InvalidGenerator("generator %r is not a positive integer" % (g,))
    gens = sorted(set(gens))
    if gens[0] == 1:
        return NATURALS
    bound = 2 * gens[-1] ** 2
    for _ in range(4):
        if bound > MAX_SIEVE:
            raise CapacityExceeded("closure window for {%s} exceeds %d entries"
                                   % (",".join(map(str, gens)), MAX_SIEVE))
        present = bytearray(bound + 1)
        present[0] = 1
        seed = set(gens)
        nonzero = []
        for y in range(1, bound + 1):
            ok = y in seed
            if not ok:
                for a in nonzero:
                    b = y - a
                    if b >= 1 and present[b]:
                        ok = True
                        break
                    b = y - a - off
                    # b == y is the useless self-derivation; present[y] is
                    # still 0 here so the test rejects it on its own
                    if b >= 1 and present[b]:
                        ok = True
                        break
            if ok:
                present[y] = 1
                nonzero.append(y)
        c = bound + 1
        while c > 0 and present[c - 1]:
            c -= 1
        if 2 * c <= bound:
            out = _canon({i for i in range(c + 1) if present[i]}, c)
            _assert_kind_closed(kind, out)
            return out
        bound *= 2
    raise NotCofinite("closure of {%s} under %s shows no stable tail"
                      % (",".join(map(str, gens)), kind))


def _kind_defect(kind, s: NumSG):
    """A nonzero pair (a, b) of members with a + b + offset outside s, if any.

    Pairs of small elements suffice: any sum involving the tail lands at or
    past the conductor.
    """
    off = _offset(kind)
    for a in s.small:
        if a == 0:
            continue
        for b in s.small:
            if b == 0:
                continue
            if b > a:
                break
            if not contains(s, a + b + off):
                return (a, b)
    return None


def _assert_kind_closed(kind, s: NumSG):
    bad = _kind_defect(kind, s)
    assert bad is None, "closure %s escapes its own kind at %s" % (
        format_semigroup(s), bad)


def restricted_closure(kind, a, t: NumSG) -> NumSG:
    """Smallest semigroup of the kind that contains a and sits inside t.

    Equals the unrestricted closure intersected with t, which requires
    a ⊆ t to begin with.
    """
    for x in a:
        if not contains(t, x):
            raise NotContained("%d is not in %s" % (x, format_semigroup(t)))
    return intersect(variety_closure(kind, a), t)


def minimal_system_via(closure_fn, m: NumSG) -> frozenset:
    """Least generating set of m under an arbitrary closure operator.

    Walks candidates upward; x is needed exactly when the closure of the
    strictly smaller nonzero members of m misses it.  Candidates beyond the
    largest minimal generator are always reachable, so the scan stops there.
    """
    top = max(msg(m))
    out = []
    prefix = []
    for x in elements(m, top):
        if x == 0:
            continue
        if not prefix or not contains(closure_fn(prefix), x):
            out.append(x)
        prefix.append(x)
    return frozenset(out)


def minimal_vsystem(kind, m: NumSG) -> frozenset:
    """Least set of positive integers whose closure of the kind is m."""
    bad = _kind_defect(kind, m)
    if bad is not None:
        off = _offset(kind)
        raise NotClosed("%d + %d %s 1 = %d escapes %s"
                        % (bad[0], bad[1], "-" if off < 0 else "+",
                           bad[0] + bad[1] + off, format_semigroup(m)))
    out = minimal_system_via(lambda gens: variety_closure(kind, gens), m)
    assert variety_closure(kind, out) == m
    return out
