"""Independent spot checks of branch decompositions.

Nothing here trusts the engine that produced a result.  Bases are
specialized at exact rational parameter points and re-checked with a
fresh Buchberger run over the variables alone, so a bug upstream cannot
vouch for itself.
"""

import math
import random
from fractions import Fraction

from .groebner import buchberger, normal_form
from .poly import Polynomial, Ring, mono_divides, _rational_roots


class Specialization:
    """Exact rational value for every parameter of a ring."""

    __slots__ = ("ring", "values")

    def __init__(self, ring, values):
        vals = {}
        for name in ring.parameters:
            if name not in values:
                raise ValueError(f"no value for parameter {name!r}")
            vals[name] = Fraction(values[name])
        for name in values:
            if name not in vals:
                raise ValueError(f"{name!r} is not a parameter")
        self.ring = ring
        self.values = vals

    def __getitem__(self, name):
        return self.values[name]

    def __eq__(self, other):
        if not isinstance(other, Specialization):
            return NotImplemented
        return self.ring == other.ring and self.values == other.values

    def __repr__(self):
        inner = ", ".join(f"{n}={v}" for n, v in self.values.items())
        return f"Specialization({inner})"


_VAR_RINGS = {}


def variable_ring(ring):
    """Copy of ring with the parameters dropped."""
    got = _VAR_RINGS.get(ring)
    if got is None:
        got = Ring(ring.variables, (), x_order=ring.blocks[0][1])
        _VAR_RINGS[ring] = got
    return got


def specialize(p, sigma):
    """Evaluate the parameters of p at sigma.

    The result lives over the variables alone and may be zero.
    """
    ring = p.ring
    if sigma.ring != ring:
        raise ValueError("specialization belongs to a different ring")
    target = variable_ring(ring)
    nx = ring.nx
    acc = {}
    for m, c in p.terms:
        v = c
        for name, e in zip(ring.parameters, m[nx:]):
            if e:
                v *= sigma.values[name] ** e
        xm = m[:nx]
        acc[xm] = acc.get(xm, Fraction(0)) + v
    return Polynomial(target, acc)


def _eval_params(p, values):
    # p must not involve the variables
    ring = p.ring
    nx = ring.nx
    total = Fraction(0)
    for m, c in p.terms:
        if any(m[:nx]):
            raise ValueError("polynomial involves a variable")
        v = c
        for name, e in zip(ring.parameters, m[nx:]):
            if e:
                v *= values[name] ** e
        total += v
    return total


# -- rational point sampling ----------------------------------------------


_POOL = tuple(Fraction(n) for n in (0, 1, -1, 2, -2, 3, -3, 5, -5)) + (
    Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(-2, 3))


def _substitute(p, values):
    ring = p.ring
    acc = {}
    for m, c in p.terms:
        v = c
        mono = list(m)
        for name, val in values.items():
            i = ring.index[name]
            if mono[i]:
                v *= val ** mono[i]
                mono[i] = 0
        key = tuple(mono)
        acc[key] = acc.get(key, Fraction(0)) + v
    return Polynomial(ring, acc)


def _univariate_roots(p, i):
    top = max(m[i] for m, _ in p.terms)
    coeffs = [Fraction(0)] * (top + 1)
    for m, c in p.terms:
        coeffs[m[i]] += c
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    low = next(k for k, v in enumerate(ints) if v)
    roots = [Fraction(0)] if low else []
    if len(ints) - low > 1:
        roots.extend(_rational_roots(ints[low:]))
    return roots


def _solve_once(seg, rng):
    # One randomized pass: satisfy the equations of seg, or give up.
    ring = seg.ring
    values = {}
    pending = list(seg.equal)
    while pending:
        progressed = False
        deferred = []
        for e in pending:
            r = _substitute(e, values)
            if r.is_zero():
                progressed = True
                continue
            if r.is_constant():
                return None
            free = r.support()
            if len(free) == 1:
                i = next(iter(free))
                roots = _univariate_roots(r, i)
                if not roots:
                    return None
                values[ring.names[i]] = rng.choice(roots)
                progressed = True
            else:
                deferred.append(r)
        if deferred and not progressed:
            # pin the least significant free name and retry the rest
            i = max(i for q in deferred for i in q.support()
                    if ring.names[i] not in values)
            values[ring.names[i]] = rng.choice(_POOL)
        pending = deferred
    for name in ring.parameters:
        if name not in values:
            values[name] = rng.choice(_POOL)
    return values


def sample_in(seg, seed=0, attempts=60):
    """Rational parameter point inside seg, or None.

    Equations are solved triangularly where substitution leaves them
    univariate; parameters left free are drawn from a small pool.  The
    search is bounded, and None tells the caller to fall back to
    symbolic checks.
    """
    if not seg.consistent():
        return None
    rng = random.Random(seed)
    for _ in range(attempts):
        values = _solve_once(seg, rng)
        if values is None:
            continue
        if all(_eval_params(e, values) == 0 for e in seg.equal) and \
                all(_eval_params(n, values) != 0 for n in seg.nonzero):
            return Specialization(seg.ring, values)
    return None


def segment_holds(seg, sigma):
    """Does the sampled point satisfy the segment conditions?"""
    vals = sigma.values
    return (all(_eval_params(e, vals) == 0 for e in seg.equal)
            and all(_eval_params(n, vals) != 0 for n in seg.nonzero))


def random_point(ring, seed):
    """Arbitrary rational parameter point, not tied to any segment."""
    rng = random.Random(seed)
    return Specialization(ring, {n: rng.choice(_POOL)
                                 for n in ring.parameters})


# -- verdicts over the variables -------------------------------------------


def is_groebner(B, F):
    """Is B a Groebner basis of the ideal generated by F?

    Both live over the variables alone.  True when every member of B
    reduces to zero against a fresh reduced basis of F and the two
    leading term ideals agree.
    """
    B = [b for b in B if not b.is_zero()]
    F = [f for f in F if not f.is_zero()]
    if not F:
        return not B
    gb = buchberger(F).generators
    if not B:
        return False
    for b in B:
        if not normal_form(b, gb).is_zero():
            return False
    for g in gb:
        if not any(mono_divides(b.lm, g.lm) for b in B):
            return False
    return True


def confirm_witness(p, M, seg, seed=0, samples=5):
    """Does seg really witness that M cannot spare p?

    At sampled points p must specialize nonzero with no other member's
    leading monomial dividing its own.  When no point can be sampled
    the coefficient statuses over seg decide symbolically.
    """
    others = [q for q in M if q != p]
    checked = 0
    for k in range(samples):
        sigma = sample_in(seg, seed=seed + 7919 * k)
        if sigma is None:
            break
        checked += 1
        sp = specialize(p, sigma)
        if sp.is_zero():
            return False
        for q in others:
            sq = specialize(q, sigma)
            if not sq.is_zero() and mono_divides(sq.lm, sp.lm):
                return False
    if checked:
        return True
    lead = seg.lt_under(p)
    if lead is None:
        return False
    for q in others:
        ql = seg.lt_under(q)
        if ql is not None and mono_divides(ql[0], lead[0]):
            return False
    return True


def verify_result(result, minimal=None, samples=10, seed=0):
    """Spot-check a decomposition at sampled parameter points.

    Per branch, up to samples points are drawn from the segment; at
    each, the branch basis and the universal basis (and minimal, when
    given) must pass is_groebner against the specialized inputs.
    Returns a plain report dict ready for serialization.
    """
    branches = []
    checks = failures = 0
    for bi, br in enumerate(result.branches):
        sampled = bad = 0
        for k in range(samples):
            sigma = sample_in(br.segment, seed=seed + 10007 * bi + k)
            if sigma is None:
                continue
            sampled += 1
            fs = [specialize(f, sigma) for f in result.inputs]
            sets = [br.basis, result.cgb]
            if minimal is not None:
                sets.append(minimal)
            for S in sets:
                checks += 1
                if not is_groebner([specialize(g, sigma) for g in S], fs):
                    bad += 1
        failures += bad
        branches.append({
            "equal": [str(e) for e in br.segment.equal],
            "nonzero": [str(n) for n in br.segment.nonzero],
            "sampled": sampled,
            "failures": bad,
        })
    return {"ok": failures == 0, "checks": checks, "failures": failures,
            "branches": branches}


# -- random problem generation ---------------------------------------------


_XNAMES = ("x", "y", "z")
_UNAMES = ("u", "v")


_COEFFS = (1, 2, 3, 4, 5, -1, -2, -3, -4, -5)


def random_system(seed):
    """Small random parametric system biased toward prunable output.

    At most three variables, two parameters and three generators; total
    degree at most three, integer coefficients in [-5, 5].  Generators
    share their leading variable monomial, which makes branch bases
    overlap often enough for the minimality pass to have work to do.
    One-variable and three-generator-two-parameter shapes are avoided;
    they tend to explode the parameter ideals.
    """
    rng = random.Random(seed)
    shape = rng.random()
    if shape < 0.35:
        nx, nu, ngens = 3, 2, 2
    elif shape < 0.60:
        nx, nu, ngens = 3, 1, 3
    elif shape < 0.80:
        nx, nu, ngens = 2, 1, 3
    else:
        nx, nu, ngens = 2, 1, 2
    ring = Ring(_XNAMES[:nx], _UNAMES[:nu])

    def xmono(lo=0):
        m = [0] * nx
        for _ in range(rng.randint(lo, 2)):
            m[rng.randrange(nx)] += 1
        return tuple(m)

    xpool = [xmono(lo=1)]
    while len(xpool) < 4:
        m = xmono()
        if m not in xpool:
            xpool.append(m)
    xpool.sort(key=ring.x_key, reverse=True)

    def coeff_terms(need_param):
        # distinct parameter monomials keep every coefficient a single draw
        acc = {}
        for j in range(rng.randint(1, 2)):
            um = [0] * nu
            if (need_param and j == 0) or rng.random() < 0.7:
                um[rng.randrange(nu)] += 1
            if tuple(um) not in acc:
                acc[tuple(um)] = Fraction(rng.choice(_COEFFS))
        return acc

    gens = []
    for gi in range(ngens):
        picks = [xpool[0]] + rng.sample(xpool[1:], 2)
        acc = {}
        for k, xm in enumerate(picks):
            for um, c in coeff_terms(k == 0).items():
                acc[xm + um] = c
        p = Polynomial(ring, acc)
        if not p.is_zero() and p not in gens:
            gens.append(p)
    if not gens:
        gens = [ring.var_at(0)]
    return ring, gens
