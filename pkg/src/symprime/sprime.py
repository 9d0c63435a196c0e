"""Multiplicity/weight/variety data for a symmetric-group-stable prime and a
decision procedure for membership of explicit polynomials.

A prime is described by a canonical WeightedShape together with an ideal in
the configuration coordinates t1..tr; the configuration locus is the variety
of that ideal restricted to the open set where all coordinates differ.
Membership of a polynomial is decided by substituting every admissible
placement of its variables into the parts, truncating jet directions at the
part weights, and testing each surviving coefficient on the locus.
"""

import itertools
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .combinat import INF, WeightedShape, canonicalize
from .groebner import (DEFAULT_BUDGET, BudgetExceededError, Ideal,
                       groebner_basis, is_unit_ideal, normal_form,
                       radical_member, saturate)
from .poly import Poly, QQ, evar, mono_degree, tvar, var_key


@dataclass(frozen=True)
class SPrimeData:
    """Shape plus configuration ideal; the computable face of a stable prime."""

    shape: WeightedShape
    z_ideal: Ideal
    assume_irreducible: bool = True

    def to_json_obj(self):
        obj = self.shape.to_json_obj()
        obj["Z"] = [str(g) for g in self.z_ideal.gens]
        return obj

    @classmethod
    def from_json_obj(cls, obj, assume_irreducible=True):
        from .poly import parse
        parts = [INF if p == "inf" else int(p) for p in obj["lambda"]]
        weights = [int(w) for w in obj["e"]]
        gens = [parse(s) for s in obj.get("Z", [])]
        return make_sprime(parts, weights, gens, assume_irreducible)

    def __str__(self):
        return "%s Z=<%s>" % (self.shape, ", ".join(str(g) for g in self.z_ideal.gens))


def diff_product(r, field=QQ):
    """Product of pairwise coordinate differences t_a - t_b, a < b."""
    out = Poly.const(1, field)
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            out = out * (Poly.variable(tvar(a), field) - Poly.variable(tvar(b), field))
    return out


def make_sprime(parts, weights, gens, assume_irreducible=True):
    """Canonicalize the data, permuting t-variables of the ideal to match."""
    if isinstance(gens, Ideal):
        gens = gens.gens
    shape, perm = canonicalize(parts, weights)
    r = shape.r
    for g in gens:
        bad = [v for v in g.variables() if v[0] != "t" or v[1] > r]
        if bad:
            raise ValueError("ideal generator %s uses variables outside t1..t%d" % (g, r))
    # old position perm[k] moves to canonical position k
    rename = {tvar(perm[k] + 1): Poly.variable(tvar(k + 1), QQ) for k in range(r)}
    moved = tuple(g.substitute(rename) for g in gens)
    data = SPrimeData(shape, Ideal(moved, ambient=tuple(tvar(i + 1) for i in range(r))),
                      assume_irreducible)
    if not assume_irreducible:
        warnings.warn("configuration variety not asserted irreducible; "
                      "prime-ness of the data is not guaranteed")
    if is_unit_ideal(saturated_ideal(data)):
        warnings.warn("configuration locus is empty; the data describes the unit ideal")
    return data


def radical_of(p):
    """Same shape and variety with all weights reset to 1."""
    shape = WeightedShape(p.shape.parts, tuple(1 for _ in p.shape.weights))
    return SPrimeData(shape, p.z_ideal, p.assume_irreducible)


@lru_cache(maxsize=None)
def _saturated(z_ideal, r):
    return saturate(z_ideal, diff_product(r, z_ideal.field))


def saturated_ideal(p):
    """The configuration ideal saturated at the pairwise difference product."""
    if p.shape.r == 1:
        return p.z_ideal
    return _saturated(p.z_ideal, p.shape.r)


def q_ideal_truncated(p, rho):
    """Finite-window jet ideal: configuration relations plus e_i^(weight).

    rho maps each window index i (1-based) to a part position (1-based).
    """
    r = p.shape.r
    gens = list(p.z_ideal.gens)
    ambient = list(tvar(i + 1) for i in range(r))
    for i, alpha in sorted(rho.items()):
        if not 1 <= alpha <= r:
            raise ValueError("assignment target %d out of range" % alpha)
        gens.append(Poly.variable(evar(i), QQ) ** p.shape.weights[alpha - 1])
        ambient.append(evar(i))
    return Ideal(gens, ambient=tuple(ambient))


def assignments(indices, shape, surjective_only=False):
    """All placements of the window indices into parts, respecting finite
    part capacities.  Yields dicts index -> part position (1-based)."""
    indices = tuple(indices)
    r = shape.r
    caps = [p if p != INF else None for p in shape.parts]
    for choice in itertools.product(range(1, r + 1), repeat=len(indices)):
        ok = True
        for alpha in range(1, r + 1):
            cap = caps[alpha - 1]
            if cap is not None and sum(1 for c in choice if c == alpha) > cap:
                ok = False
                break
            if surjective_only and alpha not in choice:
                ok = False
                break
        if ok:
            yield dict(zip(indices, choice))


def _x_window(f):
    xs = set()
    for v in f.variables():
        if v[0] != "x":
            raise ValueError("membership is defined for polynomials in x-variables")
        xs.add(v[1])
    return tuple(sorted(xs))


def truncated_substitution(f, assign, weights):
    """Coefficients of f(x_i -> t_part(i) + e_i) with e_i^weight truncated.

    Returns a dict mapping jet monomials (in the e-variables) to polynomials
    in the t-variables.  weights is indexed by part position - 1.
    """
    fld = f.field
    out = {}
    for mono, c in f.terms.items():
        partial = {((), ()): c}
        for v, k in mono:
            alpha = assign[v[1]]
            w = weights[alpha - 1]
            branches = [(k - j, j, math.comb(k, j)) for j in range(min(k, w - 1) + 1)]
            tv, ev = tvar(alpha), evar(v[1])
            nxt = {}
            for (tm, em), cc in partial.items():
                for texp, eexp, binom in branches:
                    ntm = tm
                    if texp:
                        d = dict(ntm)
                        d[tv] = d.get(tv, 0) + texp
                        ntm = tuple(sorted(d.items(), key=lambda it: var_key(it[0])))
                    nem = em + ((ev, eexp),) if eexp else em
                    key = (ntm, nem)
                    val = fld.mul(cc, fld.coerce(binom))
                    if key in nxt:
                        val = fld.add(nxt[key], val)
                    if val:
                        nxt[key] = val
                    elif key in nxt:
                        del nxt[key]
            partial = nxt
        for (tm, em), cc in partial.items():
            em = tuple(sorted(em, key=lambda it: var_key(it[0])))
            bucket = out.setdefault(em, {})
            if tm in bucket:
                s = fld.add(bucket[tm], cc)
                if s:
                    bucket[tm] = s
                else:
                    del bucket[tm]
            else:
                bucket[tm] = cc
    return {em: Poly(fld, tms) for em, tms in out.items() if tms}


def member(f, p, budget=None):
    """True iff f lies in the stable prime described by p.

    Every admissible placement of f's variables into the parts must send f
    into the jet ideal: after truncation, each coefficient polynomial has to
    vanish on the configuration locus.
    """
    budget = budget or DEFAULT_BUDGET
    if f.is_zero():
        return True
    xs = _x_window(f)
    sat = saturated_ideal(p)
    if is_unit_ideal(sat, budget):
        return True
    gb = groebner_basis(sat, budget=budget)
    order = gb.default_order()
    count = p.shape.r ** len(xs)
    if count > budget.max_reductions:
        raise BudgetExceededError("placement space of size %d exceeds budget" % count)
    verdicts = {}
    for assign in assignments(xs, p.shape):
        coeffs = truncated_substitution(f, assign, p.shape.weights)
        for tpoly in coeffs.values():
            keyp = _scale_normalize(tpoly)
            verdict = verdicts.get(keyp)
            if verdict is None:
                verdict = (normal_form(keyp, gb.gens, order, budget).is_zero()
                           or radical_member(keyp, sat, budget))
                verdicts[keyp] = verdict
            if not verdict:
                return False
    return True


def _scale_normalize(f):
    if f.is_zero():
        return f
    ambient = sorted(f.variables(), key=var_key)
    pos = {v: i for i, v in enumerate(ambient)}

    def key(m):
        exps = [0] * len(ambient)
        for v, k in m:
            exps[pos[v]] = k
        return (mono_degree(m), tuple(-e for e in reversed(exps)))

    lead = max(f.terms, key=key)
    return f.scale(f.field.inv(f.terms[lead]))


def member_via_derivatives(f, p, budget=None):
    """Independent membership check through formal derivatives (char 0).

    f belongs iff for every placement and every derivative multi-order below
    the part weights, the derivative evaluated on the diagonal configuration
    vanishes on the locus.
    """
    if f.field.char != 0:
        raise ValueError("the derivative criterion needs characteristic 0")
    if f.is_zero():
        return True
    xs = _x_window(f)
    sat = saturated_ideal(p)
    if is_unit_ideal(sat):
        return True
    for assign in assignments(xs, p.shape):
        ranges = [range(p.shape.weights[assign[i] - 1]) for i in xs]
        to_t = {("x", i): Poly.variable(tvar(assign[i]), QQ) for i in xs}
        for orders in itertools.product(*ranges):
            g = f
            for i, k in zip(xs, orders):
                for _ in range(k):
                    g = g.derivative(("x", i))
            if not radical_member(g.substitute(to_t), sat, budget):
                return False
    return True
