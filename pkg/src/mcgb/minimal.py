"""Minimal comprehensive Groebner bases.

A universal basis usually carries members that no specialization actually
needs: on every branch where such a member appears, some other member
specializes to the same leading term.  The routines here detect that
(covering checks with on-the-fly segment partitioning), prune the basis
largest-first, keep the branch decomposition consistent after every
removal, and optionally substitute reduced stand-ins for the survivors.
"""

from dataclasses import dataclass

from .cgs import Branch, CGSResult, _union_basis, cgs
from .groebner import buchberger, express, normal_form
from .poly import (div_exact, mono_divides, poly_compare, poly_sort_key,
                   poly_sorted)
from .segments import CoeffStatus, partition_segment


@dataclass(frozen=True)
class BranchCovering:
    """How one branch survives the removal of a polynomial.

    pieces partition the branch segment; each part carries the covering
    polynomial(s) whose specialized leading term stands in there.
    degenerate lists parts where the removed polynomial vanished
    identically (nothing to cover).
    """

    branch: Branch
    pieces: tuple
    degenerate: tuple = ()


@dataclass(frozen=True)
class NotCovered:
    witness: object


@dataclass(frozen=True)
class CoveringReport:
    coverings: tuple


@dataclass(frozen=True)
class EssentialityVerdict:
    essential: bool
    witness: object = None
    branch: Branch = None
    report: CoveringReport = None


def _try_cover(q, t, seg, ring):
    """Classify candidate q against the pinned leading term t on seg.

    Returns "covers" when q's surviving lead divides t with a nonzero
    coefficient, None when q can never matter on seg or below, or the
    parameter coefficient the segment must be split on to decide.
    """
    tkey = ring.x_key(t)
    for xm, coeff in q.x_groups():
        st = seg.coeff_status(coeff)
        if st is CoeffStatus.ZERO:
            continue
        if ring.x_key(xm) > tkey or not mono_divides(xm, t):
            if st is CoeffStatus.NONZERO:
                return None
            return coeff
        if st is CoeffStatus.NONZERO:
            return "covers"
        return coeff
    return None


def check_in_branch(p, candidates, b):
    """Search coverings of p over the branch segment.

    Worklist of (sub-segment, live candidates), zero side of every split
    explored first.  Candidates are tried smallest first; the first one
    that acts decides the step: it either covers the sub-segment outright
    or names the coefficient to partition on.  Candidates that can never
    cover (a nonzero term strictly above, or a stuck non-dividing lead)
    are dropped for the whole subtree.
    """
    ring = b.segment.ring
    pieces = []
    degenerate = []
    work = [(b.segment, sorted(candidates, key=poly_sort_key))]
    while work:
        seg, cands = work.pop()
        lt = seg.lt_under(p)
        if lt is None:
            pieces.append((seg, ()))
            degenerate.append(seg)
            continue
        if lt[2] is CoeffStatus.UNDETERMINED:
            for part in reversed(partition_segment(seg, lt[1])):
                work.append((part, cands))
            continue
        t = lt[0]
        decided = False
        for i, q in enumerate(cands):
            action = _try_cover(q, t, seg, ring)
            if action is None:
                continue
            if action == "covers":
                pieces.append((seg, (q,)))
            else:
                rest = cands[i:]
                for part in reversed(partition_segment(seg, action)):
                    work.append((part, rest))
            decided = True
            break
        if not decided:
            return NotCovered(witness=seg)
    return BranchCovering(b, tuple(pieces), tuple(degenerate))


def check_essential(p, G, r):
    """Is p needed, given the working set G, anywhere in r?

    Stops at the first branch with an uncovered sub-segment (the witness);
    otherwise collects every branch's covering.
    """
    hits = [b for b in r.branches if p in b.basis]
    if not hits:
        raise ValueError("polynomial does not occur in any branch basis")
    coverings = []
    for b in hits:
        cands = [q for q in G if q != p and q not in b.basis]
        got = check_in_branch(p, cands, b)
        if isinstance(got, NotCovered):
            return EssentialityVerdict(essential=True, witness=got.witness,
                                       branch=b)
        coverings.append(got)
    return EssentialityVerdict(essential=False,
                               report=CoveringReport(tuple(coverings)))


def _rebuild_branch(segment, members):
    ring = segment.ring
    pairs = []
    for q in dict.fromkeys(members):
        lt = segment.lt_under(q)
        if lt is not None:
            pairs.append((lt[0], q))
    pairs.sort(key=lambda it: ring.x_key(it[0]))
    return Branch(segment, tuple(q for _, q in pairs),
                  tuple(t for t, _ in pairs))


def _remake(r, branches):
    branches = tuple(branches)
    cgb = tuple(_union_basis(branches))
    certs = {}
    gbF = None
    for q in cgb:
        cert = r.certificates.get(q)
        if cert is None:
            if gbF is None:
                gbF = buchberger(list(r.inputs), track=True, ring=r.ring)
            cert = express(q, list(r.inputs), gb=gbF)
        certs[q] = cert
    return CGSResult(ring=r.ring, inputs=r.inputs, variant=r.variant,
                     branches=branches, cgb=cgb, certificates=certs)


def update_cgs(r, p, report):
    """Remove p, splicing each branch's covers in; split where they vary."""
    by_branch = {id(bc.branch): bc for bc in report.coverings}
    new = []
    for br in r.branches:
        bc = by_branch.get(id(br))
        if bc is None:
            if p in br.basis:
                raise ValueError("covering report misses a branch holding p")
            new.append(br)
            continue
        rest = [q for q in br.basis if q != p]
        if len(bc.pieces) == 1:
            new.append(_rebuild_branch(br.segment,
                                       rest + list(bc.pieces[0][1])))
        else:
            for seg, covers in bc.pieces:
                new.append(_rebuild_branch(seg, rest + list(covers)))
    return _remake(r, new)


def _parametric_ratio(g, f):
    """The parameter polynomial c with g = c*f, or None."""
    gx = g.x_groups()
    fx = f.x_groups()
    if len(gx) != len(fx) or [m for m, _ in gx] != [m for m, _ in fx]:
        return None
    c = div_exact(gx[0][1], fx[0][1])
    if c is None or c.is_constant():
        return None
    for (_, cg), (_, cf) in zip(gx[1:], fx[1:]):
        if cf * c != cg:
            return None
    return c


def preprocess(r):
    """Drop parametric multiples: whenever g = c*f, keep only f.

    Specializations never need both: wherever sigma(g) is nonzero so is
    sigma(f), with the same leading term up to the unit sigma(c).
    Returns r itself when nothing matches.
    """
    polys = poly_sorted(r.cgb)
    target = {}
    for i, f in enumerate(polys):
        for g in polys[i + 1:]:
            if g not in target and _parametric_ratio(g, f) is not None:
                target[g] = f
    if not target:
        return r

    def root(q):
        while q in target:
            q = target[q]
        return q

    return _remake(r, [_rebuild_branch(br.segment,
                                       [root(q) for q in br.basis])
                       for br in r.branches])


def _drive(E, N, F, variant, order, trace, simplify):
    r = preprocess(cgs(E, N, F, variant=variant))
    queue = list(r.cgb) if order == "desc" else list(reversed(r.cgb))
    M = list(r.cgb)
    for p in queue:
        verdict = check_essential(p, M, r)
        if not verdict.essential:
            r = update_cgs(r, p, verdict.report)
            M.remove(p)
            if trace is not None:
                trace.append(("removed", p, r))
            continue
        if trace is not None:
            trace.append(("essential", p, r))
        if not simplify:
            continue
        rest = [q for q in M if q != p]
        tilde = normal_form(p, rest)
        if tilde.is_zero():
            continue
        tilde = tilde.monic()
        if tilde == p:
            continue
        again = check_essential(p, rest + [tilde], r)
        if again.essential:
            continue
        r = update_cgs(r, p, again.report)
        M = poly_sorted(rest + [tilde], reverse=True)
        if trace is not None:
            trace.append(("substituted", tilde, r))
    return poly_sorted(M, reverse=True), r


def mcgb_main(E, N, F, variant="least-faithful", order="desc", trace=None):
    """Prune a fresh decomposition down to a minimal universal basis.

    Returns (M, r): every member of M is essential with respect to M, the
    branch bases of r union up to exactly M, and with the default
    largest-first order M is the set-order least basis available inside
    the starting one.
    """
    return _drive(E, N, F, variant, order, trace, simplify=False)


def mcgb_simpl(E, N, F, variant="least-faithful", order="desc", trace=None):
    """As mcgb_main, but also try to swap survivors for reduced forms.

    Each essential p is reduced against the rest of M; when the nonzero
    normal form differs and still admits a full covering alongside
    M - {p}, it replaces p in M and in every branch.
    """
    return _drive(E, N, F, variant, order, trace, simplify=True)


def set_order_compare(M1, M2):
    """Compare polynomial sets largest-element-first; prefixes are smaller."""
    a = poly_sorted(M1, reverse=True)
    b = poly_sorted(M2, reverse=True)
    for x, y in zip(a, b):
        c = poly_compare(x, y)
        if c:
            return c
    return (len(a) > len(b)) - (len(a) < len(b))


def subset_is_cgb(S, r):
    """Does S alone still provide every branch's leading terms?"""
    S = list(S)
    for b in r.branches:
        cands = [q for q in S if q not in b.basis]
        for p in b.basis:
            if p in S:
                continue
            if isinstance(check_in_branch(p, cands, b), NotCovered):
                return False
    return True
