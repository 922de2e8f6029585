import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origami.perms import (
    commutator,
    compose,
    cycles,
    format_cycles,
    identity,
    inverse,
    is_transitive,
    orbits,
    parse_cycles,
    random_permutation,
    relabel,
)

perms = st.integers(min_value=1, max_value=40).flatmap(
    lambda n: st.permutations(range(n)).map(tuple)
)


@given(perms)
def test_inverse_is_two_sided(p):
    n = len(p)
    assert compose(p, inverse(p)) == identity(n)
    assert compose(inverse(p), p) == identity(n)


@given(perms, st.randoms(use_true_random=False))
def test_compose_applies_left_then_right(p, rng):
    q = random_permutation(rng, len(p))
    s = rng.randrange(len(p))
    assert compose(p, q)[s] == q[p[s]]


@given(perms)
def test_cycle_notation_roundtrip(p):
    assert parse_cycles(format_cycles(p), len(p)) == p


@given(perms)
def test_cycles_partition_and_start_at_minimum(p):
    cyc = cycles(p)
    seen = sorted(s for c in cyc for s in c)
    assert seen == list(range(len(p)))
    starts = [c[0] for c in cyc]
    assert all(c[0] == min(c) for c in cyc)
    assert starts == sorted(starts)


@given(perms, st.randoms(use_true_random=False))
def test_commutator_definition(p, rng):
    q = random_permutation(rng, len(p))
    lhs = commutator(p, q)
    rhs = compose(compose(compose(inverse(p), inverse(q)), p), q)
    assert lhs == rhs


@given(perms, st.randoms(use_true_random=False))
def test_relabel_conjugates(p, rng):
    r = random_permutation(rng, len(p))
    moved = relabel(p, r)
    for s in range(len(p)):
        assert moved[r[s]] == r[p[s]]


def test_orbits_against_transitivity():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(1, 15)
        gens = [random_permutation(rng, n) for _ in range(2)]
        parts = orbits(gens, n)
        assert sorted(s for part in parts for s in part) == list(range(n))
        assert is_transitive(gens, n) == (len(parts) == 1)


def test_parse_cycles_is_one_based():
    assert parse_cycles("(1 2)", 3) == (1, 0, 2)
    assert parse_cycles("(1,2,3)", 3) == (1, 2, 0)
    with pytest.raises(ValueError):
        parse_cycles("(0 1)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 4)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 1)", 3)
