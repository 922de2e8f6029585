"""Translation coverings between square-tiled surfaces.

A covering is recorded by its action on squares: a map ``f`` with
``f(sigma_a(s)) = sigma_a(f(s))`` and likewise for ``sigma_b``, with all
fibers of equal size (the degree).  Such a map is a translation covering of
the underlying surfaces, branched only over vertices of the target complex.

Ramification is read off vertex cycles: a source vertex of cycle length
``L_w`` lying over a target vertex of cycle length ``L_v`` is a point of
ramification index ``L_w / L_v`` (cone angle divides exactly).  Points of
interest that are not vertices of the unit grid (torsion points of the base
torus, say) are exposed by refining both sides first; refinement changes
neither the surfaces nor the indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .perms import Perm, check_permutation, compose, cycle_type, cycles, identity, inverse, orbits
from .surface import (
    NotConnectedError,
    Origami,
    Refinement,
    VertexStructure,
    refine,
    torus,
    vertex_structure,
)


class NotEquivariantError(ValueError):
    """Square map does not commute with the gluings; carries one witness."""

    def __init__(self, square: int, direction: str):
        self.square = square
        self.direction = direction
        super().__init__(
            f"square map fails equivariance at square {square} going {direction}"
        )


class NonConstantFiberError(ValueError):
    def __init__(self, sizes):
        self.sizes = sizes
        super().__init__(f"fiber sizes are not constant: {sorted(set(sizes))}")


@dataclass(frozen=True)
class CoveringMap:
    source: Origami
    target: Origami
    square_map: Perm  # tuple, source square -> target square

    @property
    def degree(self) -> int:
        return self.source.n // self.target.n

    def __call__(self, s: int) -> int:
        return self.square_map[s]

    def __repr__(self) -> str:  # pragma: no cover
        return f"CoveringMap({self.source.n} -> {self.target.n} squares, degree {self.degree})"


def cover_from_map(source: Origami, target: Origami, square_map) -> CoveringMap:
    """Validate and build a covering from its action on squares."""
    f = tuple(square_map)
    if len(f) != source.n:
        raise ValueError("square map has wrong length")
    counts = [0] * target.n
    for t in f:
        if not 0 <= t < target.n:
            raise ValueError(f"square map value {t} out of range")
        counts[t] += 1
    if len(set(counts)) != 1:
        raise NonConstantFiberError(counts)
    for s in range(source.n):
        if f[source.sigma_a[s]] != target.sigma_a[f[s]]:
            raise NotEquivariantError(s, "east")
        if f[source.sigma_b[s]] != target.sigma_b[f[s]]:
            raise NotEquivariantError(s, "north")
    return CoveringMap(source, target, f)


def identity_cover(o: Origami) -> CoveringMap:
    return CoveringMap(o, o, identity(o.n))


def compose_covers(c1: CoveringMap, c2: CoveringMap) -> CoveringMap:
    """First ``c1: X -> Y``, then ``c2: Y -> Z``; degrees multiply."""
    if c1.target.sigma_a != c2.source.sigma_a or c1.target.sigma_b != c2.source.sigma_b:
        raise ValueError("covers do not chain: c1.target differs from c2.source")
    return CoveringMap(c1.source, c2.target, tuple(c2.square_map[t] for t in c1.square_map))


def refine_cover(c: CoveringMap, k: int) -> CoveringMap:
    """Transport a covering to the k-fold subdivision of both sides.

    Subsquare (s, i, j) maps to (f(s), i, j).  Revalidated on construction.
    """
    rs = refine(c.source, k)
    rt = refine(c.target, k)
    kk = k * k
    f = [0] * (c.source.n * kk)
    for s in range(c.source.n):
        base_src = s * kk
        base_tgt = c.square_map[s] * kk
        for off in range(kk):
            f[base_src + off] = base_tgt + off
    return cover_from_map(rs.origami, rt.origami, f)


def rebase_to_grid(c: CoveringMap) -> CoveringMap:
    """Relabel the target onto the canonical ``torus(k)`` of its grid.

    Subdivision labels subsquares block by block, so a refined torus is not
    literally equal to ``torus(k)``.  When the target fills a k x k grid this
    rewrites the covering with target ``torus(k)``, square (x, y) at index
    ``x + k*y``, leaving the source untouched.  Revalidated on construction.
    """
    t = c.target
    if t.grid_k is None or t.coords is None:
        raise ValueError("target carries no grid coordinates")
    k = t.grid_k
    if t.n != k * k or len(set(t.coords)) != t.n:
        raise ValueError("target does not fill a k x k grid")
    relab = tuple(x + k * y for x, y in t.coords)
    return cover_from_map(c.source, torus(k), tuple(relab[v] for v in c.square_map))


# ---------------------------------------------------------------------------
# Voltage (monodromy) construction: a cover of degree d over a base origami
# is cut open along the edges and reglued according to per-square sheet
# permutations.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VoltageData:
    """Sheet permutations for a degree-``d`` cover of ``base``.

    ``w_a[s]`` permutes the sheets when crossing the east edge of square
    ``s``; ``w_b[s]`` when crossing the north edge.  Missing entries are the
    identity, so only the finitely many twisted edges need to be listed.
    """

    base: Origami
    d: int
    w_a: dict[int, Perm]
    w_b: dict[int, Perm]

    def __post_init__(self):
        for w in (self.w_a, self.w_b):
            for s, p in w.items():
                if not 0 <= s < self.base.n:
                    raise ValueError(f"voltage on unknown square {s}")
                check_permutation(p, self.d)

    def voltage_a(self, s: int) -> Perm:
        return self.w_a.get(s) or identity(self.d)

    def voltage_b(self, s: int) -> Perm:
        return self.w_b.get(s) or identity(self.d)


def voltage_cover(v: VoltageData) -> tuple[Origami, CoveringMap]:
    """Total space of a voltage assignment, with its projection.

    Square ``(s, k)`` of the cover gets index ``s*d + k``.  Raises
    NotConnectedError (partition attached) when the sheets do not mix enough.
    """
    base, d = v.base, v.d
    n = base.n
    sa = [0] * (n * d)
    sb = [0] * (n * d)
    proj = [0] * (n * d)
    ida = identity(d)
    for s in range(n):
        wa = v.w_a.get(s, ida)
        wb = v.w_b.get(s, ida)
        ta = base.sigma_a[s] * d
        tb = base.sigma_b[s] * d
        row = s * d
        for k in range(d):
            sa[row + k] = ta + wa[k]
            sb[row + k] = tb + wb[k]
            proj[row + k] = s
    parts = orbits([tuple(sa), tuple(sb)], n * d)
    if len(parts) > 1:
        raise NotConnectedError(parts)
    total = Origami(tuple(sa), tuple(sb))
    return total, CoveringMap(total, base, tuple(proj))


def cover_to_voltage(c: CoveringMap) -> tuple[VoltageData, tuple[tuple[int, ...], ...]]:
    """Rewrite a covering in voltage form.

    Fibers are indexed sheet 0..d-1 by BFS from base square 0 (whose fiber is
    sorted by source index); edges inside the BFS tree get identity voltage.
    Returns the voltage data together with the fiber tables
    ``fibers[t][k] = source square of sheet k over t``.
    """
    base, d = c.target, c.degree
    n = base.n
    fibers: list[list[int] | None] = [None] * n
    fibers[0] = sorted(s for s in range(c.source.n) if c.square_map[s] == 0)
    sheet_of = [-1] * c.source.n
    for k, s in enumerate(fibers[0]):
        sheet_of[s] = k
    queue = [0]
    seen = [False] * n
    seen[0] = True
    order = []
    while queue:
        t = queue.pop(0)
        order.append(t)
        for g_base, g_src in (
            (base.sigma_a, c.source.sigma_a),
            (base.sigma_b, c.source.sigma_b),
        ):
            u = g_base[t]
            if not seen[u]:
                seen[u] = True
                fib = [g_src[s] for s in fibers[t]]
                fibers[u] = fib
                for k, s in enumerate(fib):
                    sheet_of[s] = k
                queue.append(u)
    w_a: dict[int, Perm] = {}
    w_b: dict[int, Perm] = {}
    idp = identity(d)
    for t in range(n):
        for g_base, g_src, store in (
            (base.sigma_a, c.source.sigma_a, w_a),
            (base.sigma_b, c.source.sigma_b, w_b),
        ):
            u = g_base[t]
            p = tuple(sheet_of[g_src[s]] for s in fibers[t])
            if p != idp:
                store[t] = p
    return VoltageData(base, d, w_a, w_b), tuple(tuple(f) for f in fibers)


# ---------------------------------------------------------------------------
# Ramification.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileMap:
    """Ramification profile of a covering, one multiset per target vertex.

    ``entries[v]`` lists the indices of the points above target vertex ``v``
    in decreasing order; each multiset sums to the degree (Riemann-Hurwitz
    bookkeeping is validated on construction).  ``coords[v]`` carries the
    grid coordinate of ``v`` when the target is a grid torus.
    """

    degree: int
    entries: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[int, int] | None, ...]
    grid_k: int | None

    def at_coord(self, x: int, y: int) -> tuple[int, ...]:
        for v, c in enumerate(self.coords):
            if c == (x, y):
                return self.entries[v]
        raise KeyError(f"no target vertex at coordinate ({x}, {y})")

    def nontrivial(self) -> dict[int, tuple[int, ...]]:
        return {
            v: e for v, e in enumerate(self.entries) if any(i > 1 for i in e)
        }

    def to_json(self) -> str:
        points = []
        for v, e in enumerate(self.entries):
            c = self.coords[v]
            points.append(
                {
                    "coord": [c[0], c[1], self.grid_k] if c is not None else None,
                    "vertex": v,
                    "profile": list(e),
                }
            )
        points.sort(key=lambda r: (r["coord"] is None, r["coord"], r["vertex"]))
        return json.dumps({"degree": self.degree, "points": points}, indent=2)


def target_vertex_of_source_vertex(
    c: CoveringMap, vs_src: VertexStructure, vs_tgt: VertexStructure
) -> tuple[int, ...]:
    """For each source vertex, the target vertex under the covering."""
    out = []
    for cyc in vs_src.cycles:
        imgs = {vs_tgt.vertex_of[c.square_map[s]] for s in cyc}
        if len(imgs) != 1:
            raise RuntimeError("cover does not respect vertex cycles")
        out.append(imgs.pop())
    return tuple(out)


def ramification_profile(c: CoveringMap) -> ProfileMap:
    vs_src = vertex_structure(c.source)
    vs_tgt = vertex_structure(c.target)
    below = target_vertex_of_source_vertex(c, vs_src, vs_tgt)
    ent: list[list[int]] = [[] for _ in range(vs_tgt.count)]
    for w, cyc in enumerate(vs_src.cycles):
        v = below[w]
        lv = len(vs_tgt.cycles[v])
        lw = len(cyc)
        if lw % lv:
            raise RuntimeError(
                f"vertex cycle length {lw} not divisible by {lv} below it"
            )
        ent[v].append(lw // lv)
    deg = c.degree
    for v, e in enumerate(ent):
        if sum(e) != deg:
            raise RuntimeError(
                f"profile over vertex {v} sums to {sum(e)}, expected degree {deg}"
            )
    coords: list[tuple[int, int] | None] = [None] * vs_tgt.count
    if c.target.coords is not None:
        for v, cyc in enumerate(vs_tgt.cycles):
            # Every square in the cycle has the same lower-left corner.
            pts = {c.target.coords[s] for s in cyc}
            if len(pts) == 1:
                coords[v] = pts.pop()
    return ProfileMap(
        deg,
        tuple(tuple(sorted(e, reverse=True)) for e in ent),
        tuple(coords),
        c.target.grid_k,
    )


def vertex_grid_coords(c: CoveringMap) -> tuple[tuple[int, int], ...]:
    """Coordinate, on the target grid, below each source vertex.

    The target must carry grid coordinates.  Useful for grouping vertices of
    an intermediate cover by the torsion point of the torus they sit over.
    """
    if c.target.coords is None:
        raise ValueError("target carries no grid coordinates")
    vs = vertex_structure(c.source)
    out = []
    for cyc in vs.cycles:
        pts = {c.target.coords[c.square_map[s]] for s in cyc}
        if len(pts) != 1:
            raise RuntimeError("cover does not respect vertex cycles")
        out.append(pts.pop())
    return tuple(out)


def local_monodromy(v: VoltageData, base_vertex: int) -> tuple[int, ...]:
    """Cycle type of the sheet monodromy around a vertex of the base.

    The corner loop starts in a square whose lower-left corner is the vertex
    and turns counterclockwise: west, south, east, north across each square
    of the vertex cycle.  Its cycle type equals the ramification profile of
    the voltage cover over that vertex.
    """
    base, d = v.base, v.d
    vs = vertex_structure(base)
    cyc = vs.cycles[base_vertex]
    sa_inv = inverse(base.sigma_a)
    sb_inv = inverse(base.sigma_b)
    m = identity(d)
    for s in cyc:
        west = sa_inv[s]
        south = sb_inv[west]
        east = base.sigma_a[south]
        m = compose(m, inverse(v.voltage_a(west)))
        m = compose(m, inverse(v.voltage_b(south)))
        m = compose(m, v.voltage_a(south))
        m = compose(m, v.voltage_b(east))
    return cycle_type(m)


def loop_monodromy(c: CoveringMap, start: int, steps: str) -> Perm:
    """Permutation of the fiber over ``start`` after lifting a square path.

    ``steps`` is a word over E, W, N, S (east/west/north/south).  The path
    must return to ``start``.  Sheets are indexed by sorted source square.
    """
    fiber = sorted(s for s in range(c.source.n) if c.square_map[s] == start)
    moves = {
        "E": c.source.sigma_a,
        "W": inverse(c.source.sigma_a),
        "N": c.source.sigma_b,
        "S": inverse(c.source.sigma_b),
    }
    base_moves = {
        "E": c.target.sigma_a,
        "W": inverse(c.target.sigma_a),
        "N": c.target.sigma_b,
        "S": inverse(c.target.sigma_b),
    }
    here = start
    lifted = list(fiber)
    for ch in steps:
        if ch not in moves:
            raise ValueError(f"bad step {ch!r}")
        lifted = [moves[ch][s] for s in lifted]
        here = base_moves[ch][here]
    if here != start:
        raise ValueError("path does not close up")
    index_of = {s: k for k, s in enumerate(fiber)}
    return tuple(index_of[s] for s in lifted)
