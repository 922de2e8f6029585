import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origami.perms import inverse, is_transitive, random_permutation
from origami.surface import (
    NotConnectedError,
    Origami,
    canonical_pair_inv,
    canonicalize,
    genus,
    is_equivalent,
    make_origami,
    origami_from_text,
    origami_to_text,
    refine,
    relabel_origami,
    stratum,
    torus,
    vertex_structure,
)


def random_connected(rng, n: int) -> Origami:
    while True:
        sa = random_permutation(rng, n)
        sb = random_permutation(rng, n)
        if is_transitive((sa, sb), n):
            return Origami(sa, sb)


def test_make_origami_rejects_disconnected():
    with pytest.raises(NotConnectedError):
        make_origami((1, 0, 2), (0, 1, 2))


def test_known_invariants(l3):
    assert (genus(torus(1)), stratum(torus(1))) == (1, ())
    assert (genus(torus(4)), stratum(torus(4))) == (1, ())
    assert (genus(l3), stratum(l3)) == (2, (2,))


def test_vertex_structure_partitions_squares(l3):
    vs = vertex_structure(l3)
    assert sorted(s for c in vs.cycles for s in c) == list(range(l3.n))
    for v, c in enumerate(vs.cycles):
        assert all(vs.vertex_of[s] == v for s in c)


def test_canonical_form_is_relabel_invariant():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randrange(2, 24)
        o = random_connected(rng, n)
        r = random_permutation(rng, n)
        moved = relabel_origami(o, r)
        assert canonicalize(o).pair == canonicalize(moved).pair
        assert is_equivalent(o, moved)


def test_canonical_witness_realizes_the_form():
    rng = random.Random(13)
    for _ in range(60):
        o = random_connected(rng, rng.randrange(2, 20))
        form = canonicalize(o)
        assert relabel_origami(o, form.witness) == Origami(*form.pair)


def test_canonical_pair_inv_matches_canonicalize():
    rng = random.Random(17)
    for _ in range(60):
        o = random_connected(rng, rng.randrange(2, 20))
        sa, sb = o.sigma_a, o.sigma_b
        pair, _ = canonical_pair_inv(sa, sb, inverse(sa), inverse(sb))
        assert pair == canonicalize(o).pair


def test_distinct_classes_do_not_collide(l3):
    # same stratum, different surface: the other 3-square L gluing
    other = Origami((1, 0, 2), (2, 1, 0))
    assert not is_equivalent(l3, other) or canonicalize(l3).pair == canonicalize(other).pair


@given(st.integers(min_value=1, max_value=6))
def test_torus_refinement_stays_a_torus(k):
    r = refine(torus(1), k)
    assert r.origami.n == k * k
    assert genus(r.origami) == 1


def test_refine_preserves_genus_and_scales_stratum(l3):
    for k in (2, 3):
        r = refine(l3, k)
        assert r.origami.n == l3.n * k * k
        assert genus(r.origami) == genus(l3)
        # a cone angle survives subdivision; its cycle length scales by k
        assert stratum(r.origami) == stratum(l3)
        assert all(r.parent[r.index(s, i, j)] == s
                   for s in range(l3.n) for i in range(k) for j in range(k))


def test_text_format_roundtrip():
    rng = random.Random(19)
    for _ in range(30):
        o = random_connected(rng, rng.randrange(1, 12))
        assert origami_from_text(origami_to_text(o)) == o


def test_text_format_is_strict():
    good = "squares: 3\na: (1,2)\nb: (1,3)\n"
    assert origami_from_text(good).n == 3
    with_comment = "# L-origami\nsquares: 3\n\na: (1,2)  # east\nb: (1,3)\n"
    assert origami_from_text(with_comment) == origami_from_text(good)
    for bad in (
        "a: (1,2)\nsquares: 3\nb: (1,3)\n",  # wrong key order
        "squares: 3\na: (1,2)\n",  # missing key
        "squares: 3\na: (1,2)\na: (1,2)\nb: (1,3)\n",  # duplicate
        "squares: x\na: (1,2)\nb: (1,3)\n",  # bad count
        "squares: 3\na: (0,1)\nb: (1,3)\n",  # 0-based cycle
    ):
        with pytest.raises(ValueError):
            origami_from_text(bad)


def test_equivalence_is_decided_by_canonical_pairs():
    rng = random.Random(23)
    for _ in range(80):
        n = rng.randrange(2, 12)
        o1 = random_connected(rng, n)
        o2 = random_connected(rng, n)
        same = canonicalize(o1).pair == canonicalize(o2).pair
        assert is_equivalent(o1, o2) == same
