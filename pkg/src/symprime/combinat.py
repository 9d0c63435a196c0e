"""Weighted multiplicity shapes, the degeneration preorder between them,
minimal-obstruction antichains, and refinement-pair enumeration.

A shape is a finite list of part sizes in {1, 2, ..., INF} with at least one
infinite part, together with a positive integer weight per part; weights on
finite parts are always 1 (reduced form).  Shapes are kept in canonical
order: parts sorted descending by (size, weight) with INF largest.
"""

import itertools
from dataclasses import dataclass

INF = float("inf")


class BoundInsufficiencyError(RuntimeError):
    """The enumeration box provably failed to capture a minimal element."""


def is_inf(part):
    return part == INF


def _check_parts_weights(parts, weights):
    if len(parts) != len(weights):
        raise ValueError("parts and weights must have equal length")
    if not parts:
        raise ValueError("a shape needs at least one part")
    for p in parts:
        if p != INF and (not isinstance(p, int) or p < 1):
            raise ValueError("part sizes must be positive integers or INF")
    for w in weights:
        if not isinstance(w, int) or w < 1:
            raise ValueError("weights must be positive integers")
    if not any(p == INF for p in parts):
        raise ValueError("at least one part must be infinite")


@dataclass(frozen=True)
class WeightedShape:
    """Canonical multiplicity/weight data: one (size, weight) pair per part."""

    parts: tuple
    weights: tuple

    def __post_init__(self):
        _check_parts_weights(self.parts, self.weights)
        pw = list(zip(self.parts, self.weights))
        if pw != sorted(pw, reverse=True):
            raise ValueError("shape is not in canonical descending order")
        if any(w != 1 for p, w in pw if p != INF):
            raise ValueError("weights on finite parts must be 1")

    @property
    def r(self):
        return len(self.parts)

    def inf_indices(self):
        return tuple(i for i, p in enumerate(self.parts) if p == INF)

    def finite_sum(self):
        return sum(p for p in self.parts if p != INF)

    def inf_weight_sum(self):
        return sum(w for p, w in zip(self.parts, self.weights) if p == INF)

    def e_max(self):
        return max(self.weights)

    def to_json_obj(self):
        return {"lambda": ["inf" if p == INF else p for p in self.parts],
                "e": list(self.weights)}

    @classmethod
    def from_json_obj(cls, obj):
        parts = [INF if p == "inf" else int(p) for p in obj["lambda"]]
        weights = [int(w) for w in obj["e"]]
        return canonicalize(parts, weights)[0]

    def __str__(self):
        ps = ",".join("inf" if p == INF else str(p) for p in self.parts)
        ws = ",".join(str(w) for w in self.weights)
        return "(%s);(%s)" % (ps, ws)


def canonicalize(parts, weights):
    """Reduce weights on finite parts, sort canonically, report the sort.

    Returns (shape, perm) where perm[k] is the position in the input of the
    part now at canonical position k.
    """
    parts = list(parts)
    weights = list(weights)
    _check_parts_weights(parts, weights)
    reduced = [w if p == INF else 1 for p, w in zip(parts, weights)]
    order = sorted(range(len(parts)),
                   key=lambda i: (parts[i], reduced[i], -i), reverse=True)
    shape = WeightedShape(tuple(parts[i] for i in order),
                          tuple(reduced[i] for i in order))
    return shape, tuple(order)


def shape(parts, weights):
    """Canonical WeightedShape from arbitrary part/weight lists."""
    return canonicalize(parts, weights)[0]


def shape_sort_key(s):
    return (s.r,
            tuple((0, -w) if p == INF else (1, -p)
                  for p, w in zip(s.parts, s.weights)),
            tuple(-w for w in s.weights))


@dataclass(frozen=True)
class GoodPair:
    """A subset of source parts with a surjection onto the target parts.

    domain lists the chosen source part positions (0-based, ascending) and
    targets[i] is the target part position assigned to domain[i].
    """

    domain: tuple
    targets: tuple

    def fiber(self, beta):
        return tuple(a for a, b in zip(self.domain, self.targets) if b == beta)

    def target_of(self, alpha):
        return self.targets[self.domain.index(alpha)]


def good_pairs(target, source):
    """All (subset, map) pairs certifying that target degenerates from source.

    The multiplicity condition requires each target part size to be at most
    the total source size mapped onto it; the weight condition requires each
    infinite target part's weight to be at most the total weight of the
    infinite source parts mapped onto it.
    """
    out = []
    src_idx = range(source.r)
    subsets = sorted(
        (tuple(c) for k in range(1, source.r + 1)
         for c in itertools.combinations(src_idx, k)))
    for domain in subsets:
        for targets in itertools.product(range(target.r), repeat=len(domain)):
            ok = True
            for beta in range(target.r):
                fiber = [a for a, b in zip(domain, targets) if b == beta]
                size = sum(source.parts[a] for a in fiber) if fiber else 0
                if target.parts[beta] > size:
                    ok = False
                    break
                if target.parts[beta] == INF:
                    wsum = sum(source.weights[a] for a in fiber
                               if source.parts[a] == INF)
                    if target.weights[beta] > wsum:
                        ok = False
                        break
            if ok:
                out.append(GoodPair(domain, targets))
    return tuple(out)


def shape_leq(a, b):
    """True iff shape a is a degeneration of shape b (a below b)."""
    return bool(good_pairs(a, b))


def predecessors(s, finite_cap):
    """Immediate downward moves from s: delete a part, decrement a finite
    part, decrement a weight, or replace a weight-1 infinite part by the
    finite cap.  Invalid results (no infinite part left) are skipped."""
    out = set()
    n = s.r
    for i in range(n):
        parts = list(s.parts)
        weights = list(s.weights)
        # delete part i
        if n > 1 and any(p == INF for j, p in enumerate(parts) if j != i):
            out.add(shape(parts[:i] + parts[i + 1:], weights[:i] + weights[i + 1:]))
        if parts[i] != INF and parts[i] > 1:
            out.add(shape(parts[:i] + [parts[i] - 1] + parts[i + 1:], weights))
        if parts[i] == INF and weights[i] > 1:
            out.add(shape(parts, weights[:i] + [weights[i] - 1] + weights[i + 1:]))
        if (parts[i] == INF and weights[i] == 1
                and any(p == INF for j, p in enumerate(parts) if j != i)):
            out.add(shape(parts[:i] + [finite_cap] + parts[i + 1:], weights))
    return sorted(out, key=shape_sort_key)


def _box_candidates(max_parts, finite_cap, weight_cap):
    """All canonical shapes with at most max_parts parts, finite sizes at
    most finite_cap, and weights at most weight_cap."""
    alphabet = [(INF, w) for w in range(weight_cap, 0, -1)]
    alphabet += [(p, 1) for p in range(finite_cap, 0, -1)]
    for k in range(1, max_parts + 1):
        for combo in itertools.combinations_with_replacement(alphabet, k):
            if combo[0][0] != INF:
                continue  # canonical order puts an infinite part first
            parts = tuple(p for p, _ in combo)
            weights = tuple(w for _, w in combo)
            yield WeightedShape(parts, weights)


def psi0(base):
    """Minimal shapes that are not degenerations of base (a finite antichain).

    The search box is derived from threshold arguments: beyond r+1 parts,
    finite sizes above 1 + (sum of base's finite parts), or weights above
    1 + (total weight on base's infinite parts), comparability with base no
    longer changes.  A boundary check guards the box at runtime.
    """
    r = base.r
    finite_cap = 1 + base.finite_sum()
    weight_cap = 1 + base.inf_weight_sum()
    obstructions = [s for s in _box_candidates(r + 1, finite_cap, weight_cap)
                    if not shape_leq(s, base)]
    minimal = [s for s in obstructions
               if not any(t != s and shape_leq(t, s) for t in obstructions)]
    # certificate: every immediate predecessor of a minimal element degenerates
    for s in minimal:
        for t in predecessors(s, finite_cap):
            if not shape_leq(t, base):
                raise BoundInsufficiencyError(
                    "predecessor %s of minimal %s is still an obstruction" % (t, s))
    # boundary guard: boundary obstructions must dominate a minimal element
    for s in obstructions:
        on_boundary = (s.r == r + 1
                       or any(p != INF and p == finite_cap for p in s.parts)
                       or any(w == weight_cap for w in s.weights))
        if on_boundary and not any(shape_leq(m, s) for m in minimal):
            raise BoundInsufficiencyError(
                "boundary obstruction %s dominates no minimal element" % (s,))
    return tuple(sorted(minimal, key=shape_sort_key))


def refinement_pairs(source, target):
    """All (map, sub-composition) pairs splitting target parts into source parts.

    Enumerates total maps phi from source part positions onto target part
    positions together with part sizes kappa such that kappa is bounded by
    the source sizes, equals them over infinite targets, and adds up exactly
    to each target size fiber by fiber.
    """
    lam = source.parts
    mu = target.parts
    out = []
    for phi in itertools.product(range(len(mu)), repeat=len(lam)):
        fibers = [[a for a, b in enumerate(phi) if b == beta]
                  for beta in range(len(mu))]
        if any(not f for f in fibers):
            continue
        choices_per_beta = []
        ok = True
        for beta, fiber in enumerate(fibers):
            if mu[beta] == INF:
                if all(lam[a] != INF for a in fiber):
                    ok = False
                    break
                choices_per_beta.append([tuple(lam[a] for a in fiber)])
            else:
                opts = _bounded_compositions(mu[beta],
                                             [lam[a] for a in fiber])
                if not opts:
                    ok = False
                    break
                choices_per_beta.append(opts)
        if not ok:
            continue
        for pick in itertools.product(*choices_per_beta):
            kappa = [None] * len(lam)
            for beta, fiber in enumerate(fibers):
                for a, k in zip(fiber, pick[beta]):
                    kappa[a] = k
            out.append((phi, tuple(kappa)))
    return sorted(out)


def _bounded_compositions(total, caps):
    """All tuples of positive integers below the caps summing to total."""
    if total == INF:
        return []
    results = []

    def rec(i, remaining, acc):
        if i == len(caps):
            if remaining == 0:
                results.append(tuple(acc))
            return
        hi = remaining - (len(caps) - i - 1)
        cap = caps[i] if caps[i] != INF else hi
        for k in range(1, min(cap, hi) + 1):
            rec(i + 1, remaining - k, acc + [k])

    rec(0, total, [])
    return results


def parse_shape_arg(lambda_text, e_text):
    """Shape from CLI-style comma lists, e.g. 'inf,inf' and '2,2'."""
    parts = [INF if tok.strip() == "inf" else int(tok) for tok in lambda_text.split(",")]
    weights = [int(tok) for tok in e_text.split(",")]
    return shape(parts, weights)
