"""Multivariate polynomials over Q with block term orders.

Names are grouped into blocks, each ordered by lex or grlex, and earlier
blocks weigh strictly more than later ones.  The usual setup has a block
of main variables followed by a block of parameters, so any monomial in
the main variables dominates every parameter monomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd, isqrt

ORDERS = ("lex", "grlex")


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponentwise a - b, or None if any entry would go negative."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _block_key(exps, order):
    if order == "grlex":
        return (sum(exps), exps)
    return exps


class Ring:
    """Polynomial ring over Q in named variables and parameters.

    Monomials are dense exponent tuples over variables + parameters in
    declaration order; within a block, names declared earlier weigh more.
    `blocks` may be given explicitly to insert helper names with their own
    significance level, as long as the flattened name list still reads
    variables followed by parameters.
    """

    __slots__ = ("variables", "parameters", "names", "index", "nx", "blocks",
                 "_spans", "_zero", "_one")

    def __init__(self, variables=(), parameters=(), x_order="lex",
                 u_order="lex", blocks=None):
        variables = tuple(variables)
        parameters = tuple(parameters)
        if blocks is None:
            blocks = ((variables, x_order), (parameters, u_order))
        blocks = tuple((tuple(ns), o) for ns, o in blocks)
        names = tuple(n for ns, _ in blocks for n in ns)
        if names != variables + parameters:
            raise ValueError("blocks must flatten to variables then parameters")
        if len(set(names)) != len(names):
            raise ValueError("duplicate name")
        for _, o in blocks:
            if o not in ORDERS:
                raise ValueError(f"unknown order {o!r}")
        self.variables = variables
        self.parameters = parameters
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.nx = len(variables)
        self.blocks = blocks
        spans = []
        start = 0
        for ns, o in blocks:
            spans.append((start, start + len(ns), o))
            start += len(ns)
        self._spans = tuple(spans)
        self._zero = None
        self._one = None

    def key(self, mono):
        """Sort key; bigger key means more significant monomial."""
        return tuple(_block_key(mono[s:e], o) for s, e, o in self._spans)

    def mono_cmp(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def x_part(self, mono):
        return mono[:self.nx]

    def u_part(self, mono):
        return mono[self.nx:]

    def x_key(self, xpart):
        """Key for a bare variable monomial, per the first block's order."""
        return _block_key(xpart, self._spans[0][2])

    @property
    def zero(self):
        if self._zero is None:
            self._zero = Polynomial._make(self, {})
        return self._zero

    @property
    def one(self):
        if self._one is None:
            self._one = self.constant(1)
        return self._one

    def constant(self, c):
        return Polynomial._make(self, {(0,) * len(self.names): Fraction(c)})

    def var(self, name):
        return self.var_at(self.index[name])

    def var_at(self, i):
        mono = [0] * len(self.names)
        mono[i] = 1
        return Polynomial._make(self, {tuple(mono): Fraction(1)})

    def mono(self, **exps):
        mono = [0] * len(self.names)
        for n, e in exps.items():
            mono[self.index[n]] = e
        return tuple(mono)

    def term(self, coeff, **exps):
        return Polynomial._make(self, {self.mono(**exps): Fraction(coeff)})

    def __eq__(self, other):
        if not isinstance(other, Ring):
            return NotImplemented
        return self.blocks == other.blocks and self.variables == other.variables

    def __hash__(self):
        return hash((self.blocks, self.variables))

    def __repr__(self):
        parts = [f"{ns}:{o}" for ns, o in self.blocks]
        return f"Ring({', '.join(parts)})"


class Polynomial:
    """Immutable polynomial; terms kept sorted, most significant first."""

    __slots__ = ("ring", "terms", "_groups")

    def __init__(self, ring, coeffs=()):
        acc = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != len(ring.names):
                raise ValueError("monomial length mismatch")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(c)
        made = Polynomial._make(ring, acc)
        self.ring = ring
        self.terms = made.terms
        self._groups = None

    @classmethod
    def _make(cls, ring, acc):
        self = object.__new__(cls)
        self.ring = ring
        self.terms = tuple(sorted(
            ((m, c) for m, c in acc.items() if c),
            key=lambda t: ring.key(t[0]), reverse=True))
        self._groups = None
        return self

    # -- basic queries ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or self.terms[0][0] == (0,) * len(self.ring.names)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms[0][1]

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def support(self):
        """Indices of names that occur with positive exponent."""
        out = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return frozenset(out)

    def total_degree(self):
        return max((sum(m) for m, _ in self.terms), default=-1)

    def degree_in(self, name):
        i = self.ring.index[name]
        return _deg_in(self, i)

    def is_param_only(self):
        nx = self.ring.nx
        zero_x = (0,) * nx
        return all(m[:nx] == zero_x for m, _ in self.terms)

    # -- structure over the main variables -------------------------------

    def x_groups(self):
        """Pairs (variable monomial, parameter coefficient), biggest first."""
        if self._groups is None:
            nx = self.ring.nx
            pad = (0,) * nx
            groups = []
            cur = None
            acc = None
            for m, c in self.terms:
                xp = m[:nx]
                if xp != cur:
                    if cur is not None:
                        groups.append((cur, Polynomial._make(self.ring, acc)))
                    cur = xp
                    acc = {}
                acc[pad + m[nx:]] = c
            if cur is not None:
                groups.append((cur, Polynomial._make(self.ring, acc)))
            self._groups = tuple(groups)
        return self._groups

    def lt_x(self):
        """Leading monomial in the main variables alone."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return self.ring.x_part(self.terms[0][0])

    def lc_u(self):
        """Parameter coefficient attached to lt_x."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return self.x_groups()[0][1]

    def coeff_of_x(self, xmono):
        """Parameter coefficient of one variable monomial (zero if absent)."""
        nx = self.ring.nx
        pad = (0,) * nx
        acc = {}
        for m, c in self.terms:
            if m[:nx] == xmono:
                acc[pad + m[nx:]] = c
        return Polynomial._make(self.ring, acc)

    def drop_x_terms(self, xmonos):
        """Copy without the terms whose variable part lies in xmonos."""
        nx = self.ring.nx
        drop = set(xmonos)
        return Polynomial._make(
            self.ring, {m: c for m, c in self.terms if m[:nx] not in drop})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m, Fraction(0)) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial._make(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero
            return Polynomial._make(self.ring,
                                    {m: cc * c for m, cc in self.terms})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                v = acc.get(m, Fraction(0)) + c1 * c2
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return Polynomial._make(self.ring, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def monic(self):
        """Divide by the leading rational coefficient; zero stays zero."""
        if not self.terms:
            return self
        return self / self.lc

    # -- ordering and identity -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __lt__(self, other):
        return poly_compare(self, other) < 0

    def __le__(self, other):
        return poly_compare(self, other) <= 0

    def __gt__(self, other):
        return poly_compare(self, other) > 0

    def __ge__(self, other):
        return poly_compare(self, other) >= 0

    def __bool__(self):
        return bool(self.terms)

    # -- text --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.terms):
            mag = _term_str(self.ring, m, abs(c))
            if k == 0:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f" + {mag}" if c > 0 else f" - {mag}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _term_str(ring, mono, coeff):
    # parameter coefficient first, then the variable part, as the tables print
    order = list(range(ring.nx, len(ring.names))) + list(range(ring.nx))
    names = []
    for i in order:
        n, e = ring.names[i], mono[i]
        if e == 1:
            names.append(n)
        elif e > 1:
            names.append(f"{n}^{e}")
    if not names:
        return str(coeff)
    body = "*".join(names)
    if coeff == 1:
        return body
    return f"{coeff}*{body}"


def poly_compare(p, q):
    """Total order on same-ring polynomials.

    Descending term sequences compared lexicographically: at the first
    position where the monomials differ the larger monomial wins, at the
    first equal-monomial position with different coefficients the larger
    coefficient wins, and a strict prefix is smaller.  Reduction steps
    only rewrite a monomial into smaller ones, so normal forms always
    compare below the polynomial they came from.
    """
    if p.ring != q.ring:
        raise ValueError("ring mismatch")
    key = p.ring.key
    for (ma, ca), (mb, cb) in zip(p.terms, q.terms):
        if ma != mb:
            return 1 if key(ma) > key(mb) else -1
        if ca != cb:
            return 1 if ca > cb else -1
    if len(p.terms) != len(q.terms):
        return 1 if len(p.terms) > len(q.terms) else -1
    return 0


poly_sort_key = cmp_to_key(poly_compare)


def poly_sorted(ps, reverse=False):
    return sorted(ps, key=poly_sort_key, reverse=reverse)


def transfer(p, target):
    """Rebuild p inside the ring target.

    Every name p actually uses must exist in target; names may change
    position or significance.
    """
    src = p.ring
    pos = [target.index.get(n) for n in src.names]
    width = len(target.names)
    acc = {}
    for m, c in p.terms:
        mono = [0] * width
        for i, e in enumerate(m):
            if e:
                j = pos[i]
                if j is None:
                    raise ValueError(f"name {src.names[i]!r} not in target ring")
                mono[j] = e
        acc[tuple(mono)] = acc.get(tuple(mono), Fraction(0)) + c
    return Polynomial._make(target, acc)


# -- exact division, gcd, squarefree parts --------------------------------


def div_exact(p, q):
    """Quotient p / q when q divides p exactly, else None."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ring = p.ring
    qlm, qlc = q.terms[0]
    quot = {}
    rem = dict(p.terms)
    while rem:
        m = max(rem, key=ring.key)
        d = mono_div(m, qlm)
        if d is None:
            return None
        c = rem[m] / qlc
        quot[d] = c
        for mm, cc in q.terms:
            mp = mono_mul(d, mm)
            v = rem.get(mp, Fraction(0)) - c * cc
            if v:
                rem[mp] = v
            else:
                rem.pop(mp, None)
    return Polynomial._make(ring, quot)


def _deg_in(p, i):
    return max((m[i] for m, _ in p.terms), default=-1)


def _coeff_in(p, i, d):
    acc = {}
    for m, c in p.terms:
        if m[i] == d:
            acc[m[:i] + (0,) + m[i + 1:]] = c
    return Polynomial._make(p.ring, acc)


def _var_pow(ring, i, e):
    mono = [0] * len(ring.names)
    mono[i] = e
    return Polynomial._make(ring, {tuple(mono): Fraction(1)})


def _derivative_at(p, i):
    acc = {}
    for m, c in p.terms:
        e = m[i]
        if e:
            acc[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._make(p.ring, acc)


def derivative(p, name):
    return _derivative_at(p, p.ring.index[name])


def normalize_primitive(p):
    """Scale p so coefficients are integers with content 1 and the lead positive."""
    if p.is_zero():
        return p
    den = 1
    for _, c in p.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for _, c in p.terms:
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num)
    if p.lc < 0:
        scale = -scale
    return p * scale


def _prem(a, b, i):
    # pseudo remainder of a by b along name i
    db = _deg_in(b, i)
    lcb = _coeff_in(b, i, db)
    r = a
    while not r.is_zero():
        dr = _deg_in(r, i)
        if dr < db:
            break
        r = lcb * r - _coeff_in(r, i, dr) * _var_pow(r.ring, i, dr - db) * b
    return r


def _content_in(p, i):
    g = p.ring.zero
    for d in sorted({m[i] for m, _ in p.terms}, reverse=True):
        g = poly_gcd(g, _coeff_in(p, i, d))
        if not g.is_zero() and not g.support():
            return p.ring.one
    return g


def _gcd_rec(p, q):
    ring = p.ring
    used = p.support() | q.support()
    if not used:
        return ring.one
    i = min(used)
    cp = _content_in(p, i)
    cq = _content_in(q, i)
    pp = div_exact(p, cp)
    pq = div_exact(q, cq)
    c = poly_gcd(cp, cq)
    a, b = pp, pq
    if _deg_in(a, i) < _deg_in(b, i):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, i)
        a = b
        b = r if r.is_zero() else div_exact(r, _content_in(r, i))
    return c * a


def poly_gcd(p, q):
    """Greatest common divisor, returned primitive with positive lead."""
    if p.ring != q.ring:
        raise ValueError("ring mismatch")
    if p.is_zero() and q.is_zero():
        return p.ring.zero
    if p.is_zero():
        return normalize_primitive(q)
    if q.is_zero():
        return normalize_primitive(p)
    return normalize_primitive(_gcd_rec(p, q))


def squarefree_part(p):
    """Product of the distinct irreducible factors of p, primitive form."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = normalize_primitive(p)
    used = p.support()
    if not used:
        return p.ring.one
    g = p
    for i in sorted(used):
        g = poly_gcd(g, _derivative_at(p, i))
    return normalize_primitive(div_exact(p, g))


# -- factor extraction ------------------------------------------------------


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _rational_roots(coeffs):
    # coeffs: ascending integer coefficients, coeffs[0] != 0, coeffs[-1] != 0
    roots = []
    cands = set()
    for num in _divisors(coeffs[0]):
        for den in _divisors(coeffs[-1]):
            cands.add(Fraction(num, den))
            cands.add(Fraction(-num, den))
    for r in sorted(cands):
        v = Fraction(0)
        for c in reversed(coeffs):
            v = v * r + c
        if v == 0:
            roots.append(r)
    return roots


def extract_factors(p):
    """Distinct primitive factors of p, multiplicity dropped.

    Pulls out single names and rational linear factors; whatever resists
    stays whole.  The product of the result vanishes exactly where p does,
    which is all later stages rely on.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    ring = p.ring
    out = []

    def push(f):
        if f not in out and not f.is_constant():
            out.append(f)

    work = normalize_primitive(p)
    for i, _ in enumerate(ring.names):
        e = min(m[i] for m, _ in work.terms)
        if e > 0:
            push(ring.var_at(i))
            work = div_exact(work, _var_pow(ring, i, e))
    if not work.support():
        return out
    work = squarefree_part(work)
    used = work.support()
    if len(used) == 1:
        i = next(iter(used))
        top = _deg_in(work, i)
        coeffs = [_coeff_in(work, i, d).constant_value() for d in range(top + 1)]
        assert coeffs[0] != 0
        for r in _rational_roots([int(c) for c in coeffs]):
            lin = _var_pow(ring, i, 1) * r.denominator - ring.constant(r.numerator)
            push(lin)
            while True:
                q = div_exact(work, lin)
                if q is None:
                    break
                work = q
        if work.support():
            push(normalize_primitive(work))
    else:
        push(work)
    return out
