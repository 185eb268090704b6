"""Exact arithmetic on numerical semigroups.

A numerical semigroup is a subset of the nonnegative integers that contains 0,
is closed under addition, and has finite complement.  Values are kept in
canonical small-elements form: the sorted tuple of all members up to and
including the conductor (the point from which every integer is a member).
All operations are pure; NumSG values are immutable and hashable.
"""

from bisect import bisect_left
from functools import lru_cache, reduce
from math import gcd


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


class EmptyGenerators(DomainError):
    pass


class InvalidGenerator(DomainError):
    pass


class GcdNotOne(DomainError):
    pass


class NotMember(DomainError):
    pass


class NotMinimalGenerator(DomainError):
    pass


class AlreadyMember(DomainError):
    pass


class NotClosed(DomainError):
    pass


class NotContained(DomainError):
    pass


class EqualSemigroups(DomainError):
    pass


class CapacityExceeded(DomainError):
    pass


class ParseError(ValueError):
    """Malformed semigroup text; a usage error, not a domain error."""


# Dense sieves refuse to grow past this many entries, so hostile generator
# sets fail loudly instead of exhausting memory.
MAX_SIEVE = 4_000_000


class NumSG:
    """A numerical semigroup in canonical small-elements form.

    small: strictly increasing tuple of all members <= conductor.
    conductor: frobenius + 1; 0 exactly when the semigroup is all of N.
    Construct via from_generators or the module helpers, not directly.
    """

    __slots__ = ("small", "conductor", "_msg")

    def __init__(self, small, conductor):
        self.small = small
        self.conductor = conductor
        self._msg = None

    def __eq__(self, other):
        return isinstance(other, NumSG) and self.small == other.small

    def __hash__(self):
        return hash(self.small)

    def __repr__(self):
        return "NumSG(%s)" % format_semigroup(self)

    # total order used only for deterministic output
    def sort_key(self):
        return (genus(self), self.small)


def _canon(members, top):
    """Build a NumSG from an explicit member set.

    members must be exactly S ∩ [0, top] for a semigroup S known to contain
    every integer >= top.  Finds the minimal conductor and trims.
    """
    c = top
    while c > 0 and (c - 1) in members:
        c -= 1
    small = tuple(sorted(x for x in members if x <= c))
    # 0 is a member of every semigroup; conductor is a member unless 0
    assert small and small[0] == 0 and (c == 0 or small[-1] == c)
    return NumSG(small, c)


def from_generators(gens) -> NumSG:
    """Canonical numerical semigroup generated by gens; requires gcd 1."""
    gens = list(gens)
    if not gens:
        raise EmptyGenerators("no generators given")
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise InvalidGenerator("generator %r is not a positive integer" % (g,))
    gens = sorted(set(gens))
    if 1 in gens:
        return NumSG((0,), 0)
    d = reduce(gcd, gens)
    if d != 1:
        raise GcdNotOne("gcd(%s) = %d, not 1" % (",".join(map(str, gens)), d))
    lo, hi = gens[0], gens[-1]
    bound = lo * hi + 1
    while True:
        if bound > MAX_SIEVE:
            raise CapacityExceeded("sieve for <%s> exceeds %d entries"
                                   % (",".join(map(str, gens)), MAX_SIEVE))
        # reachable[i] <=> i is a nonnegative integer combination of gens
        reachable = bytearray(bound + 1)
        reachable[0] = 1
        for i in range(lo, bound + 1):
            for g in gens:
                if g > i:
                    break
                if reachable[i - g]:
                    reachable[i] = 1
                    break
        # a run of lo consecutive members proves the tail is complete
        run = 0
        tail = -1
        for i in range(bound + 1):
            run = run + 1 if reachable[i] else 0
            if run == lo:
                tail = i - lo + 1
                break
        if tail >= 0:
            members = {i for i in range(tail + 1) if reachable[i]}
            return _canon(members, tail)
        bound *= 2


def contains(s: NumSG, x) -> bool:
    if x < 0:
        return False
    if x >= s.conductor:
        return True
    i = bisect_left(s.small, x)
    return i < len(s.small) and s.small[i] == x


def frobenius(s: NumSG) -> int:
    """Largest integer not in s; -1 when s is all of N."""
    return s.conductor - 1


def genus(s: NumSG) -> int:
    """Number of gaps (nonnegative integers outside s)."""
    if s.conductor == 0:
        return 0
    # small contains the conductor plus every member below it
    return s.conductor - (len(s.small) - 1)


def multiplicity(s: NumSG) -> int:
    return s.small[1] if len(s.small) > 1 else 1


def elements(s: NumSG, limit):
    """Yield the members of s that are <= limit, in increasing order."""
    for x in s.small:
        if x > limit:
            return
        yield x
    yield from range(s.conductor + 1, limit + 1)


def msg(s: NumSG) -> tuple:
    """The unique minimal generating set, strictly increasing.

    An element is a minimal generator iff it is not a sum of two nonzero
    members; all candidates lie in (0, conductor + multiplicity].
    """
    if s._msg is None:
        if s.conductor == 0:
            s._msg = (1,)
        else:
            m = multiplicity(s)
            out = []
            for x in elements(s, s.conductor + m):
                if x == 0:
                    continue
                if any(a and contains(s, x - a) for a in elements(s, x // 2)):
                    continue
                out.append(x)
            s._msg = tuple(out)
    return s._msg


@lru_cache(maxsize=65536)
def intersect(s: NumSG, t: NumSG) -> NumSG:
    """Set intersection; always a numerical semigroup."""
    top = max(s.conductor, t.conductor)
    members = set(elements(s, top)) & set(elements(t, top))
    members.add(top)
    return _canon(members, top)


def intersect_all(sgs) -> NumSG:
    return reduce(intersect, sgs)


def is_subset(s: NumSG, t: NumSG) -> bool:
    # the tail [conductor(s), inf) fits in t only if it starts past t's
    if s.conductor < t.conductor:
        return False
    return all(contains(t, x) for x in s.small)


def remove_element(s: NumSG, x: int) -> NumSG:
    """s without the minimal generator x; genus grows by exactly 1."""
    if not contains(s, x) or x <= 0:
        raise NotMember("%d is not a positive member of %s" % (x, format_semigroup(s)))
    if x not in msg(s):
        raise NotMinimalGenerator("%d is not a minimal generator of %s"
                                  % (x, format_semigroup(s)))
    top = max(s.conductor, x + 1)
    members = set(elements(s, top))
    members.discard(x)
    return _canon(members, top)


def add_element(s: NumSG, x: int) -> NumSG:
    """s with the gap x adjoined; errors unless the result is closed."""
    if x < 0:
        raise NotMember("%d is negative" % x)
    if contains(s, x):
        raise AlreadyMember("%d is already in %s" % (x, format_semigroup(s)))
    # s is closed, so only sums involving x can fail
    for a in s.small:
        if a == 0:
            continue
        v = a + x
        if v < s.conductor and not contains(s, v) and v != x:
            raise NotClosed("%d + %d = %d escapes %s ∪ {%d}"
                            % (a, x, v, format_semigroup(s), x))
    v = x + x
    if v < s.conductor and not contains(s, v):
        raise NotClosed("%d + %d = %d escapes %s ∪ {%d}"
                        % (x, x, v, format_semigroup(s), x))
    top = max(s.conductor, x + 1)
    members = set(elements(s, top))
    members.add(x)
    return _canon(members, top)


@lru_cache(maxsize=65536)
def union_with_tail(s: NumSG, delta: NumSG, n: int) -> NumSG:
    """s ∪ {x in delta | x >= n} for s ⊆ delta; closed by construction."""
    top = max(s.conductor, delta.conductor, n)
    members = set(elements(s, top))
    members.update(x for x in elements(delta, top) if x >= n)
    members.add(top)
    return _canon(members, top)


def restricted_frobenius(s: NumSG, t: NumSG) -> int:
    """max(t \\ s) for s strictly contained in t."""
    if not is_subset(s, t):
        raise NotContained("%s is not contained in %s"
                           % (format_semigroup(s), format_semigroup(t)))
    if s == t:
        raise EqualSemigroups("restricted Frobenius of a semigroup in itself")
    # every member of t from conductor(s) up is in s, so scan below it
    best = -1
    for y in elements(t, s.conductor - 1):
        if not contains(s, y):
            best = y
    assert best >= 0
    return best


NATURALS = NumSG((0,), 0)


def parse_semigroup(text: str) -> NumSG:
    """Parse '<5,6,7>' or '5,6,7' as a generator list."""
    raw = text.strip()
    body = raw
    if body.startswith("<") and body.endswith(">"):
        body = body[1:-1]
    elif body.startswith("<") or body.endswith(">"):
        raise ParseError("unbalanced angle brackets in %r" % raw)
    if not body.strip():
        raise ParseError("empty generator list in %r" % raw)
    gens = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise ParseError("bad generator token %r in %r" % (tok, raw))
        gens.append(int(tok))
    return from_generators(gens)


def format_semigroup(s: NumSG) -> str:
    return "<%s>" % ",".join(map(str, msg(s)))
