import random

import pytest

from origami.covering import (
    NonConstantFiberError,
    NotEquivariantError,
    VoltageData,
    compose_covers,
    cover_from_map,
    cover_to_voltage,
    identity_cover,
    local_monodromy,
    loop_monodromy,
    ramification_profile,
    rebase_to_grid,
    refine_cover,
    vertex_grid_coords,
    voltage_cover,
)
from origami.perms import cycle_type, random_permutation
from origami.surface import NotConnectedError, Origami, genus, torus, vertex_structure
from origami.zoo import build_ew

from .test_surface import random_connected


def random_voltage(rng, base: Origami, d: int):
    """Random degree-d voltage cover of ``base``, or None when disconnected."""
    vd = VoltageData(
        base,
        d,
        {s: random_permutation(rng, d) for s in range(base.n) if rng.random() < 0.5},
        {s: random_permutation(rng, d) for s in range(base.n) if rng.random() < 0.5},
    )
    try:
        return vd, voltage_cover(vd)
    except NotConnectedError:
        return None


def test_cover_from_map_validates():
    o = torus(2)
    with pytest.raises(ValueError):
        cover_from_map(o, torus(1), (0, 0, 0))
    with pytest.raises(NonConstantFiberError):
        cover_from_map(o, o, (0, 1, 2, 2))
    with pytest.raises(NotEquivariantError):
        cover_from_map(o, o, (0, 1, 3, 2))
    c = cover_from_map(o, torus(1), (0, 0, 0, 0))
    assert c.degree == 4
    assert identity_cover(o).degree == 1


def test_riemann_hurwitz_bookkeeping():
    rng = random.Random(3)
    checked = 0
    while checked < 25:
        base = random_connected(rng, rng.randrange(1, 5))
        built = random_voltage(rng, base, rng.randrange(2, 5))
        if built is None:
            continue
        _, (total, c) = built
        pm = ramification_profile(c)
        assert all(sum(e) == c.degree for e in pm.entries)
        branch = sum(sum(i - 1 for i in e) for e in pm.entries)
        assert 2 * genus(total) - 2 == c.degree * (2 * genus(base) - 2) + branch
        checked += 1


def test_local_monodromy_matches_profile():
    rng = random.Random(11)
    checked = 0
    while checked < 15:
        base = random_connected(rng, rng.randrange(1, 4))
        built = random_voltage(rng, base, rng.randrange(2, 5))
        if built is None:
            continue
        vd, (_, c) = built
        pm = ramification_profile(c)
        for v in range(vertex_structure(base).count):
            assert local_monodromy(vd, v) == pm.entries[v]
        checked += 1


def test_voltage_roundtrip_is_isomorphic():
    rng = random.Random(5)
    checked = 0
    while checked < 15:
        base = random_connected(rng, rng.randrange(1, 5))
        built = random_voltage(rng, base, rng.randrange(2, 4))
        if built is None:
            continue
        _, (total, c) = built
        vd2, fibers = cover_to_voltage(c)
        total2, c2 = voltage_cover(vd2)
        d = c.degree
        # sheet (t, k) of the rebuilt cover names source square fibers[t][k]
        back = tuple(fibers[i // d][i % d] for i in range(total2.n))
        assert sorted(back) == list(range(total.n))
        for i in range(total2.n):
            assert total.sigma_a[back[i]] == back[total2.sigma_a[i]]
            assert total.sigma_b[back[i]] == back[total2.sigma_b[i]]
            assert c.square_map[back[i]] == c2.square_map[i]
        checked += 1


def test_compose_covers_multiplies_degrees():
    pi = build_ew().covers["pi"]
    mid = rebase_to_grid(refine_cover(pi, 2))
    onto_t1 = cover_from_map(mid.target, torus(1), (0, 0, 0, 0))
    both = compose_covers(mid, onto_t1)
    assert both.degree == pi.degree * 4
    with pytest.raises(ValueError):
        compose_covers(onto_t1, mid)


def test_refine_cover_scales_profiles():
    pi = build_ew().covers["pi"]
    pm1 = ramification_profile(pi)
    assert pm1.entries == ((2, 2, 2, 2),)
    pm4 = ramification_profile(rebase_to_grid(refine_cover(pi, 4)))
    # the original branch point sits at (0, 0) of the refined grid
    assert pm4.at_coord(0, 0) == pm1.entries[0]
    untouched = [e for v, e in enumerate(pm4.entries) if pm4.coords[v] != (0, 0)]
    assert untouched == [(1,) * pi.degree] * 15
    assert pm4.nontrivial() != {}


def test_rebase_to_grid_gives_canonical_torus():
    c = rebase_to_grid(refine_cover(build_ew().covers["pi"], 3))
    assert c.target == torus(3)
    coords = vertex_grid_coords(c)
    assert set(coords) == {(x, y) for x in range(3) for y in range(3)}
    assert coords.count((0, 0)) == 4
    assert len(coords) == 4 + 8 * 8


def test_loop_monodromy_reads_ramification():
    c = rebase_to_grid(refine_cover(build_ew().covers["pi"], 2))
    # E N W S encircles the top-right corner of the start square
    assert cycle_type(loop_monodromy(c, 3, "ENWS")) == (2, 2, 2, 2)
    assert cycle_type(loop_monodromy(c, 0, "ENWS")) == (1,) * 8
    with pytest.raises(ValueError):
        loop_monodromy(c, 0, "EN")
    with pytest.raises(ValueError):
        loop_monodromy(c, 0, "EX")


def test_profile_json_shape():
    import json

    pm = ramification_profile(build_ew().covers["pi"])
    data = json.loads(pm.to_json())
    assert data["degree"] == 8
    assert data["points"] == [
        {"coord": [0, 0, 1], "vertex": 0, "profile": [2, 2, 2, 2]}
    ]
