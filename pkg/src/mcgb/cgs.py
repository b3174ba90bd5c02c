"""Comprehensive Groebner system construction with faithful branch bases.

A parametric system has, for each specialization of the parameters, an
ordinary Groebner basis over the main variables.  The recursion here
carves parameter space into finitely many constructible segments and
attaches to each a polynomial set that specializes to a minimal Groebner
basis everywhere on the segment.  Every attached polynomial is an honest
combination of the input generators (a cofactor certificate is kept), so
the union over all branches is a single universal basis of the ideal.

Sibling subtrees of the recursion are independent; the fixed exploration
order makes the branch list deterministic without forbidding concurrent
evaluation.
"""

from dataclasses import dataclass

from .groebner import buchberger, express, normal_form
from .poly import (extract_factors, mono_divides, poly_sort_key,
                   poly_sorted)
from .segments import CoeffStatus, Segment

_VARIANTS = {
    "least-faithful": "least-faithful",
    "min-nonzero-part": "min-nonzero-part",
    "min-nonzero": "min-nonzero-part",
}


@dataclass(frozen=True)
class Branch:
    """One segment with its specialized-basis representatives.

    basis[i] lies in the input ideal and is monic; lts[i] is its leading
    variable monomial under every specialization in the segment.  The lts
    are pairwise non-divisible.
    """

    segment: Segment
    basis: tuple
    lts: tuple

    def __iter__(self):
        return iter(self.basis)


@dataclass(frozen=True, eq=False)
class CGSResult:
    """Branch decomposition plus the extracted universal basis.

    certificates maps each basis polynomial to its cofactors over the
    inputs (p = sum of cofactor*input).
    """

    ring: object
    inputs: tuple
    variant: str
    branches: tuple
    cgb: tuple
    certificates: dict


def _nonzero_part(p, seg):
    dead = [xm for xm, c in p.x_groups()
            if seg.coeff_status(c) is CoeffStatus.ZERO]
    return p.drop_x_terms(dead) if dead else p


def minimal_dickson_basis(G, s, variant="least-faithful", faithful=None):
    """Smallest subset of G whose leading terms under s divide all of G's.

    Members of G whose coefficients all vanish on s are ignored.  When
    several members share one minimal leading term the tie is broken by
    variant: least-faithful takes the member whose faithful representative
    (via the callable, identity by default) is smallest; min-nonzero-part
    compares the members themselves with their vanishing groups dropped.
    Result is ordered by leading term, smallest first.
    """
    mode = _VARIANTS.get(variant)
    if mode is None:
        raise ValueError(f"unknown variant {variant!r}")
    slots = {}
    for g in G:
        lt = s.lt_under(g)
        if lt is not None:
            slots.setdefault(lt[0], []).append(g)
    minimal = [xm for xm in slots
               if not any(o != xm and mono_divides(o, xm) for o in slots)]
    minimal.sort(key=s.ring.x_key)
    rep = faithful if faithful is not None else (lambda p: p)
    out = []
    for xm in minimal:
        cands = slots[xm]
        if len(cands) > 1:
            if mode == "least-faithful":
                cands = sorted(cands, key=lambda p: poly_sort_key(rep(p)))
            else:
                cands = sorted(
                    cands, key=lambda p: poly_sort_key(_nonzero_part(p, s)))
        out.append(cands[0])
    return out


def cgs(E0, N0, F, variant="least-faithful", ring=None):
    """Decompose the segment (E0, N0) into branches for the ideal of F."""
    if _VARIANTS.get(variant) is None:
        raise ValueError(f"unknown variant {variant!r}")
    if ring is None:
        pool = list(F) + list(E0) + list(N0)
        if not pool:
            raise ValueError("cannot infer the ring from empty input")
        ring = pool[0].ring
    F = [f for f in F if not f.is_zero()]
    branches = []
    _explore(Segment(ring, E0, N0), tuple(F), variant, ring, branches)
    certificates = {}
    gbF = None
    for br in branches:
        for p in br.basis:
            if p in certificates:
                continue
            if gbF is None:
                gbF = buchberger(F, track=True, ring=ring)
            certificates[p] = express(p, F, gb=gbF)
    return CGSResult(ring=ring, inputs=tuple(F),
                     variant=_VARIANTS[variant], branches=tuple(branches),
                     cgb=tuple(_union_basis(branches)),
                     certificates=certificates)


def _explore(seg, F, variant, ring, out):
    if not seg.consistent():
        return
    G = buchberger(list(F) + list(seg.equal), track=True, ring=ring)
    cofs = dict(zip(G.generators, G.cofactors))
    memo = {}
    prod = []

    def faithful(g):
        # replace g by the smallest member of g's coset that lies in <F>;
        # normal form against <E>*<F> makes the choice path-independent
        if g in memo:
            return memo[g]
        raw = ring.zero
        for c, f in zip(cofs[g], F):
            raw = raw + c * f
        if raw.is_zero():
            memo[g] = None
            return None
        if not prod:
            prod.append(buchberger(
                [e * f for e in seg.equal for f in F], ring=ring))
        lifted = normal_form(raw, prod[0].generators).monic()
        memo[g] = lifted
        return lifted

    # any parameter-only relation g splits off the locus where it keeps a
    # nonzero value: there the specialized ideal is the whole ring
    relations = poly_sorted(
        [g for g in G if g.is_param_only()], reverse=True)
    zeroed = list(seg.equal)
    for g in relations:
        bseg = Segment(ring, zeroed, list(seg.nonzero) + [g])
        if bseg.consistent():
            p = faithful(g)
            out.append(Branch(bseg, (p,), (bseg.lt_under(p)[0],)))
        zeroed.append(g)

    res = Segment(ring, zeroed, seg.nonzero)
    if not res.consistent():
        return
    live = [g for g in G
            if not g.is_param_only() and res.lt_under(g) is not None]
    picked = minimal_dickson_basis(live, res, variant, faithful=faithful)
    if not picked:
        # the ideal vanishes identically on the residual segment
        out.append(Branch(res, (), ()))
        return
    factors = []
    for m in picked:
        for f in extract_factors(res.lt_under(m)[1]):
            if f not in factors:
                factors.append(f)
    h = ring.one
    for f in factors:
        h = h * f
    bseg = res.with_nonzero([h])
    if bseg.consistent():
        basis = tuple(faithful(m) for m in picked)
        out.append(Branch(bseg, basis,
                          tuple(bseg.lt_under(p)[0] for p in basis)))
    prefix = ring.one
    for i, c in enumerate(factors):
        extra = [prefix] if i else []
        _explore(Segment(ring, list(res.equal) + [c],
                         list(seg.nonzero) + extra),
                 F, variant, ring, out)
        prefix = prefix * c


def _union_basis(branches):
    seen = []
    for br in branches:
        for p in br.basis:
            q = p.monic()
            if q not in seen:
                seen.append(q)
    return poly_sorted(seen, reverse=True)


def extract_cgb(result):
    """Deduplicated union of all branch bases, largest first."""
    return list(result.cgb)
