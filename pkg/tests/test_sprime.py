"""Prime data construction and the membership oracle."""

import random
import warnings

import pytest

from symprime.combinat import INF, shape
from symprime.poly import Poly, parse, xvar
from symprime.sprime import (SPrimeData, assignments, make_sprime, member,
                             member_via_derivatives, q_ideal_truncated,
                             radical_of)


def test_make_sprime_canonicalizes():
    p = make_sprime([1, INF], [1, 2], [parse("t1 - 2*t2")])
    assert p.shape == shape([INF, 1], [2, 1])
    # part 1 (finite) moved to position 2, so t1 -> t2 and t2 -> t1
    assert [str(g) for g in p.z_ideal.gens] == ["-2*t1 + t2"]


def test_make_sprime_rejects_bad_variables():
    with pytest.raises(ValueError):
        make_sprime([INF], [1], [parse("t2")])
    with pytest.raises(ValueError):
        make_sprime([INF], [1], [parse("x1")])


def test_make_sprime_warnings():
    with warnings.catch_warnings(record=True) as log:
        warnings.simplefilter("always")
        make_sprime([INF, INF], [1, 1], [parse("t1-t2")])
    assert any("empty" in str(w.message) for w in log)
    with warnings.catch_warnings(record=True) as log:
        warnings.simplefilter("always")
        make_sprime([INF], [1], [parse("t1^2-2")], assume_irreducible=False)
    assert any("irreducible" in str(w.message) for w in log)


def test_radical_of():
    p = make_sprime([INF], [2], [parse("t1")])
    r = radical_of(p)
    assert r.shape.weights == (1,) and r.z_ideal == p.z_ideal
    assert radical_of(r) == r
    circ = make_sprime([INF, INF], [2, 2], [parse("t1^2+t2^2-1")])
    assert radical_of(circ).shape == shape([INF, INF], [1, 1])


def test_q_ideal_truncated_examples():
    p = make_sprime([INF], [2], [parse("t1")])
    qi = q_ideal_truncated(p, {1: 1, 2: 1})
    assert [str(g) for g in qi.gens] == ["t1", "e1^2", "e2^2"]
    p2 = make_sprime([INF], [1], [])
    qi2 = q_ideal_truncated(p2, {1: 1, 2: 1})
    assert [str(g) for g in qi2.gens] == ["e1", "e2"]
    circ = make_sprime([INF, INF], [2, 2], [parse("t1^2+t2^2-1")])
    qi3 = q_ideal_truncated(circ, {1: 1, 2: 2})
    assert [str(g) for g in qi3.gens] == ["t1^2 + t2^2 - 1", "e1^2", "e2^2"]


def test_member_power_ideal():
    p = make_sprime([INF], [2], [parse("t1")])
    assert member(parse("x1^2"), p)
    assert not member(parse("x1"), p)
    assert member(parse("x1^2*x2 + x3^5"), p)
    assert not member(parse("x1*x2*x3"), p)


def test_member_difference_powers():
    p = make_sprime([INF], [2], [])
    assert member(parse("(x1-x2)^3"), p)
    assert not member(parse("(x1-x2)^2"), p)


def test_member_is_stable_under_relabeling():
    p = make_sprime([INF], [2], [])
    assert member(parse("(x4-x7)^3"), p)
    assert not member(parse("(x4-x7)^2"), p)


@pytest.mark.parametrize("seed", range(8))
def test_member_stable_under_random_permutations(seed, rng):
    from symprime.poly import Poly, QQ
    rng = random.Random(97 + seed)
    primes = [make_sprime([INF], [2], [parse("t1")]),
              make_sprime([INF, INF], [1, 1], [parse("t1+t2")])]
    probes = [parse("x1^2 + x2*x3"), parse("(x1-x2)^3"),
              parse("x1*x2 - x3^2"), parse("x1^2*x3^2")]
    window = list(range(1, 7))
    image = rng.sample(window, len(window))
    sigma = {xvar(i): Poly.variable(xvar(j), QQ) for i, j in zip(window, image)}
    for p in primes:
        for f in probes:
            assert member(f, p) == member(f.substitute(sigma), p)


@pytest.mark.parametrize("seed", range(10))
def test_member_ideal_predicate(seed, rng):
    rng = random.Random(seed * 31)
    p = make_sprime([INF], [2], [parse("t1")])
    inside = [parse("x1^2"), parse("x1^3 - x1^2*x2"), parse("x2^2*x1")]
    f = inside[rng.randrange(len(inside))]
    g = inside[rng.randrange(len(inside))]
    assert member(f + g, p)
    mult = Poly.const(rng.randint(-3, 3))
    for i in (1, 2):
        mult = mult * Poly.variable(xvar(i)) ** rng.randint(0, 2)
    assert member(f * mult, p)


def test_member_radical_power_relation():
    # below the weight, powers climb into the unreduced prime
    p = make_sprime([INF], [2], [])
    f = parse("x1 - x2")
    assert member(f, radical_of(p))
    assert not member(f, p)
    assert member(f ** 3, p)   # power bounded by twice the weight sum
    circ22 = make_sprime([INF, INF], [2, 2], [parse("t1^2+t2^2-1")])
    circ11 = radical_of(circ22)
    g = parse("(x1-x2)*(x1^2+x2^2-1)")
    assert member(g, circ11)
    assert not member(g, circ22)
    assert member(g ** 4, circ22)


def test_member_empty_fiber_assignments_matter():
    # a single variable cannot reach both parts, yet placements with an
    # untouched part still constrain membership
    p = make_sprime([INF, INF], [1, 1], [parse("t1+t2")])
    assert list(assignments((1,), p.shape, surjective_only=True)) == []
    assert not member(parse("x1"), p)


def test_assignments_respect_finite_capacity():
    p = make_sprime([INF, 1], [1, 1], [])
    out = list(assignments((1, 2, 3), p.shape))
    assert all(sum(1 for v in a.values() if v == 2) <= 1 for a in out)
    assert len(out) == 4  # 2^3 minus the four with two or three indices in part 2


def test_member_nonsense_variables_rejected():
    p = make_sprime([INF], [1], [])
    with pytest.raises(ValueError):
        member(parse("t1"), p)


def test_member_empty_locus_is_unit():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        p = make_sprime([INF, INF], [1, 1], [parse("t1-t2")])
    assert member(parse("x1"), p)
    assert member(parse("1"), p)


DERIV_CASES = [
    ("x1^2", [INF], [2], ["t1"]),
    ("x1", [INF], [2], ["t1"]),
    ("(x1-x2)^3", [INF], [2], []),
    ("(x1-x2)^2", [INF], [2], []),
    ("x1*x2 - x1 - x2 + 1", [INF], [1], ["t1-1"]),
    ("(x1-x2)*(x1^2+x2^2-1)", [INF, INF], [1, 1], ["t1^2+t2^2-1"]),
    ("x1^2+x2^2-1", [INF, INF], [1, 1], ["t1^2+t2^2-1"]),
]


@pytest.mark.parametrize("text,parts,weights,zgens", DERIV_CASES)
def test_member_agrees_with_derivative_oracle(text, parts, weights, zgens):
    p = make_sprime(parts, weights, [parse(s) for s in zgens])
    f = parse(text)
    assert member(f, p) == member_via_derivatives(f, p)


def test_json_roundtrip():
    p = make_sprime([INF, INF], [2, 2], [parse("t1^2+t2^2-1")])
    assert SPrimeData.from_json_obj(p.to_json_obj()) == p
