"""Finite generating sets for stable primes, up to the equivariant radical.

The base set comes from the minimal obstruction shapes of the weight data;
when the configuration variety is a proper subvariety, extra elements carry
lifted locus equations, one for every choice of projected-ideal generator
over the good pairs of every admissible target shape.
"""

import itertools

from .combinat import good_pairs, shape_sort_key
from .groebner import Ideal
from .poly import Poly, mono_degree, poly_divides, var_key, xvar
from .sprime import SPrimeData, member
from .theta import projection_ideal, theta
from .witness import WitnessLayout, _h1, _h2, _h3_factors, build_h
from .combinat import _box_candidates, shape_leq, psi0


def sign_normalize(f):
    """Scale by -1 if needed so the canonically-leading coefficient is positive."""
    if f.is_zero() or f.field.char != 0:
        return f
    ambient = sorted(f.variables(), key=var_key)
    pos = {v: i for i, v in enumerate(ambient)}

    def key(m):
        exps = [0] * len(ambient)
        for v, k in m:
            exps[pos[v]] = k
        return (mono_degree(m), tuple(-e for e in reversed(exps)))

    lead = max(f.terms, key=key)
    return f if f.terms[lead] > 0 else -f


def dedup_sorted(polys):
    seen = []
    for g in polys:
        g = sign_normalize(g)
        if g not in seen:
            seen.append(g)
    seen.sort(key=lambda g: (g.degree(), len(g.terms), str(g)))
    return tuple(seen)


def gens_G(shape):
    """Witnesses against every minimal obstruction shape; these cut out the
    full-locus prime of the given shape up to the equivariant radical."""
    base = SPrimeData(shape, Ideal((), ambient=()))
    return dedup_sorted(build_h(base, mu_d) for mu_d in psi0(shape))


def _phi_targets(p, budget=None):
    """Admissible target shapes: degenerations of p's shape with finite parts
    bounded by the window constant whose degeneration closure is proper."""
    lam = p.shape
    n = 1 + lam.finite_sum()
    c = lam.inf_weight_sum()
    out = []
    for cand in _box_candidates(lam.r, n, c):
        if not shape_leq(cand, lam):
            continue
        th = theta(p, cand, budget)
        if th.is_proper():
            out.append((cand, th))
    out.sort(key=lambda pair: shape_sort_key(pair[0]))
    return out


def gens_H(p, budget=None):
    """Locus-equation elements: for each admissible target shape, every
    assignment of a projected-ideal generator to each good pair yields one
    element.  Empty when the configuration variety is the whole space."""
    if not p.z_ideal.gens:
        return ()
    out = []
    for target, _th in _phi_targets(p, budget):
        gps = good_pairs(target, p.shape)
        layout = WitnessLayout.build(p.shape, target)
        skeleton = _h1(layout) * _h2(layout)
        bases = {}
        for gp in gps:
            if gp.domain not in bases:
                bases[gp.domain] = projection_ideal(p, gp.domain, budget).gens
        for picks in itertools.product(*(bases[gp.domain] for gp in gps)):
            u_choices = dict(zip(gps, picks))
            h = skeleton
            for factor in _h3_factors(p, layout, gps, u_choices, budget):
                h = h * factor
            out.append(h)
    return dedup_sorted(out)


def full_gens(p, budget=None):
    """Combined generating set, deduplicated; generates p up to the
    equivariant radical."""
    return dedup_sorted(gens_G(p.shape) + gens_H(p, budget))


def verify_gens(p, budget=None):
    """Membership report for every constructed generator; all must hold."""
    return {str(g): member(g, p, budget) for g in full_gens(p, budget)}


def translate_divides(g, h):
    """True iff some injective renumbering of g's x-variables divides h."""
    g_idx = sorted(v[1] for v in g.variables())
    h_idx = sorted(v[1] for v in h.variables())
    if len(g_idx) > len(h_idx) or g.degree() > h.degree():
        return False
    for image in itertools.permutations(h_idx, len(g_idx)):
        rename = {xvar(a): Poly.variable(xvar(b), g.field)
                  for a, b in zip(g_idx, image)}
        if poly_divides(g.substitute(rename), h):
            return True
    return False


def prune_translate_multiples(polys):
    """Drop elements that are polynomial multiples of a renumbering of an
    earlier-kept element; processed in ascending degree for determinism."""
    ordered = dedup_sorted(polys)
    kept = []
    for g in ordered:
        if not any(translate_divides(k, g) for k in kept):
            kept.append(g)
    return tuple(kept)
