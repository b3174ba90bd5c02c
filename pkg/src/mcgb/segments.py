"""Parameter-space segments and sign reasoning for coefficients.

A segment is the set of parameter points where every member of E
vanishes and every member of N does not.  All questions about a
coefficient's behaviour on a segment reduce to radical membership
tests, so they are exact.
"""

from __future__ import annotations

import enum
from functools import reduce

from .groebner import buchberger, normal_form, radical_member
from .poly import (Polynomial, normalize_primitive, poly_sort_key,
                   squarefree_part)


class CoeffStatus(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNDETERMINED = "undetermined"


class Segment:
    """Constructible set (E, N): E all zero, each member of N nonzero.

    E is kept as its reduced Groebner basis.  Members of N are reduced
    modulo E and stored squarefree, primitive and deduplicated; nonzero
    constants are dropped.  A member of N falling into the ideal of E
    forces the segment empty.
    """

    __slots__ = ("ring", "equal", "nonzero", "_egb", "_empty",
                 "_status_cache", "_consistent")

    def __init__(self, ring, equal=(), nonzero=()):
        self.ring = ring
        egb = buchberger([e for e in equal if not e.is_zero()], ring=ring)
        self._egb = egb
        self.equal = egb.generators
        self._empty = False
        seen = []
        for n in nonzero:
            r = normal_form(n, egb.generators)
            if r.is_zero():
                self._empty = True
                continue
            if r.is_constant():
                continue
            r = squarefree_part(normalize_primitive(r))
            if r not in seen:
                seen.append(r)
        seen.sort(key=poly_sort_key)
        self.nonzero = tuple(seen)
        self._status_cache = {}
        self._consistent = None

    def __repr__(self):
        eq = ", ".join(str(e) for e in self.equal)
        nz = ", ".join(str(n) for n in self.nonzero)
        return "Segment([%s], [%s])" % (eq, nz)

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return (self.ring == other.ring and self.equal == other.equal
                and self.nonzero == other.nonzero
                and self._empty == other._empty)

    def __hash__(self):
        return hash((self.ring, self.equal, self.nonzero, self._empty))

    def nonzero_product(self):
        return reduce(lambda a, b: a * b, self.nonzero, self.ring.one)

    def consistent(self):
        """True when some parameter point satisfies all the conditions."""
        if self._consistent is None:
            if self._empty:
                self._consistent = False
            else:
                self._consistent = not radical_member(
                    self.nonzero_product(), self.equal)
        return self._consistent

    def coeff_status(self, c):
        """Behaviour of the parameter polynomial c across the segment."""
        cached = self._status_cache.get(c)
        if cached is not None:
            return cached
        if radical_member(c * self.nonzero_product(), self.equal):
            status = CoeffStatus.ZERO
        elif radical_member(self.nonzero_product(),
                            list(self.equal) + [c]):
            status = CoeffStatus.NONZERO
        else:
            status = CoeffStatus.UNDETERMINED
        self._status_cache[c] = status
        return status

    def lt_under(self, p):
        """Leading slot of p over the segment, skipping vanishing groups.

        Returns (x-monomial, coefficient, status) for the first group
        whose coefficient does not vanish identically, or None when
        every coefficient does.  status NONZERO means the slot is the
        leading monomial at every point of the segment.
        """
        for xmono, coeff in p.x_groups():
            status = self.coeff_status(coeff)
            if status is CoeffStatus.ZERO:
                continue
            return (xmono, coeff, status)
        return None

    def with_equal(self, extra):
        return Segment(self.ring, list(self.equal) + list(extra),
                       self.nonzero)

    def with_nonzero(self, extra):
        return Segment(self.ring, self.equal,
                       list(self.nonzero) + list(extra))


def partition_segment(seg, c):
    """Split seg by the sign of c: the part where c vanishes first,
    then the part where it does not.  Empty parts are dropped."""
    parts = [seg.with_equal([c]), seg.with_nonzero([c])]
    return [s for s in parts if s.consistent()]


def segment_contains(outer, inner):
    """True when every point of inner lies in outer."""
    if not inner.consistent():
        return True
    prod = inner.nonzero_product()
    for e in outer.equal:
        if not radical_member(e * prod, inner.equal):
            return False
    return radical_member(prod,
                          list(inner.equal) + [outer.nonzero_product()])


def segments_equivalent(a, b):
    return segment_contains(a, b) and segment_contains(b, a)
