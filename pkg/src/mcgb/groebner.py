"""Groebner machinery over the full ring K[X, U].

Parameters are ordinary indeterminates at this level; everything
specialization-aware lives in the segment and cgs layers.  Buchberger
keeps cofactors over the input list on request, which is what later makes
branch bases certifiably members of the original ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import (Polynomial, Ring, mono_div, mono_lcm, mono_mul,
                   poly_compare, transfer)


def _reduce(p, G):
    """Full deterministic reduction of p by G.

    Returns (normal form, quotients aligned with G).  The highest
    reducible monomial is rewritten first; among eligible reducers the
    poly_compare-least wins, so results do not depend on the order of G.
    """
    ring = p.ring
    info = [(g.lm, g.lc, g) for g in G]
    quots = [{} for _ in G]
    result = {}
    work = dict(p.terms)
    while work:
        m = max(work, key=ring.key)
        c = work.pop(m)
        choice = None
        chosen_d = None
        for idx, (lm, _, g) in enumerate(info):
            d = mono_div(m, lm)
            if d is None:
                continue
            if choice is None or g < info[choice][2]:
                choice = idx
                chosen_d = d
        if choice is None:
            result[m] = c
            continue
        lm, lc, g = info[choice]
        f = c / lc
        q = quots[choice]
        q[chosen_d] = q.get(chosen_d, Fraction(0)) + f
        for mm, cc in g.terms[1:]:
            key = mono_mul(chosen_d, mm)
            v = work.get(key, Fraction(0)) - f * cc
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    return (Polynomial._make(ring, result),
            [Polynomial._make(ring, q) for q in quots])


def normal_form(p, G):
    """Remainder of p modulo G; no monomial divisible by any leading term."""
    return _reduce(p, [g for g in G if not g.is_zero()])[0]


def s_polynomial(f, g):
    ring = f.ring
    l = mono_lcm(f.lm, g.lm)
    mf = Polynomial._make(ring, {mono_div(l, f.lm): 1 / f.lc})
    mg = Polynomial._make(ring, {mono_div(l, g.lm): 1 / g.lc})
    return mf * f - mg * g


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis, optionally with cofactors over the inputs.

    cofactors[i][j] multiplies inputs[j] in the expansion of generators[i].
    """

    ring: Ring
    generators: tuple
    inputs: tuple
    cofactors: tuple = None
    reduced: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit_ideal(self):
        return len(self.generators) == 1 and self.generators[0].is_constant()


def buchberger(F, track=False, ring=None):
    """Reduced Groebner basis of F, with cofactor tracking on request."""
    inputs = tuple(F)
    if ring is None:
        if not inputs:
            raise ValueError("empty input needs an explicit ring")
        ring = inputs[0].ring
    gens = []
    for i, f in enumerate(inputs):
        if f.is_zero():
            continue
        cofs = None
        if track:
            cofs = [ring.zero] * len(inputs)
            cofs[i] = ring.one
        gens.append([f, cofs])

    pairs = {(i, j) for i in range(len(gens)) for j in range(i + 1, len(gens))}
    treated = set()
    while pairs:
        i, j = min(pairs, key=lambda ij: (
            ring.key(mono_lcm(gens[ij[0]][0].lm, gens[ij[1]][0].lm)), ij))
        pairs.discard((i, j))
        treated.add((i, j))
        li, lj = gens[i][0].lm, gens[j][0].lm
        l = mono_lcm(li, lj)
        if l == mono_mul(li, lj):
            continue
        skip = False
        for k in range(len(gens)):
            if k in (i, j) or mono_div(l, gens[k][0].lm) is None:
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in treated and pjk in treated:
                skip = True
                break
        if skip:
            continue
        mf = Polynomial._make(ring, {mono_div(l, li): 1 / gens[i][0].lc})
        mg = Polynomial._make(ring, {mono_div(l, lj): 1 / gens[j][0].lc})
        s = mf * gens[i][0] - mg * gens[j][0]
        scofs = None
        if track:
            scofs = [mf * ca - mg * cb
                     for ca, cb in zip(gens[i][1], gens[j][1])]
        nf, quots = _reduce(s, [g[0] for g in gens])
        if nf.is_zero():
            continue
        if track:
            for q, (_, cofs) in zip(quots, gens):
                if not q.is_zero():
                    scofs = [sc - q * c for sc, c in zip(scofs, cofs)]
        n = len(gens)
        gens.append([nf, scofs])
        pairs.update((k, n) for k in range(n))

    # minimal set: no leading monomial divides another's
    order = sorted(range(len(gens)), key=lambda i: ring.key(gens[i][0].lm))
    kept = []
    for i in order:
        lm = gens[i][0].lm
        if any(mono_div(lm, gens[k][0].lm) is not None for k in kept):
            continue
        kept.append(i)
    basis = [gens[i] for i in kept]

    # inter-reduce tails to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = [basis[k][0] for k in range(len(basis)) if k != i]
            nf, quots = _reduce(basis[i][0], others)
            if nf == basis[i][0]:
                continue
            changed = True
            if track:
                cofs = basis[i][1]
                oi = 0
                for k in range(len(basis)):
                    if k == i:
                        continue
                    q = quots[oi]
                    oi += 1
                    if not q.is_zero():
                        cofs = [c - q * oc
                                for c, oc in zip(cofs, basis[k][1])]
                basis[i][1] = cofs
            basis[i][0] = nf

    out_vals = []
    out_cofs = []
    for val, cofs in basis:
        scale = 1 / val.lc
        out_vals.append(val * scale)
        if track:
            out_cofs.append(tuple(c * scale for c in cofs))
    return GroebnerBasis(ring, tuple(out_vals), inputs,
                         tuple(out_cofs) if track else None)


def ideal_member(p, F):
    """Membership of p in the ideal generated by F (or a ready basis)."""
    if isinstance(F, GroebnerBasis):
        gb = F
    else:
        F = [f for f in F if not f.is_zero()]
        if not F:
            return p.is_zero()
        gb = buchberger(F)
    return normal_form(p, gb.generators).is_zero()


def radical_member(p, F):
    """Membership of p in the radical of the ideal generated by F.

    Decided by adjoining a fresh name w, globally least, and testing
    whether F together with 1 - w*p generates the unit ideal.
    """
    if p.is_zero():
        return True
    ring = p.ring
    w = "_w"
    while w in ring.index:
        w += "_"
    ext = Ring(ring.variables, ring.parameters + (w,),
               blocks=ring.blocks + (((w,), "lex"),))
    gens = [transfer(f, ext) for f in F if not f.is_zero()]
    gens.append(ext.one - ext.var(w) * transfer(p, ext))
    return buchberger(gens).is_unit_ideal()


def express(p, F, gb=None):
    """Cofactors writing p as a combination of F, or None if p is outside.

    Pass a tracked basis of F as gb to amortize repeated calls.
    """
    F = tuple(F)
    if gb is None:
        gb = buchberger(F, track=True)
    nf, quots = _reduce(p, list(gb.generators))
    if not nf.is_zero():
        return None
    out = [p.ring.zero] * len(F)
    for q, cofs in zip(quots, gb.cofactors):
        if q.is_zero():
            continue
        for j, c in enumerate(cofs):
            if not c.is_zero():
                out[j] = out[j] + q * c
    return tuple(out)
