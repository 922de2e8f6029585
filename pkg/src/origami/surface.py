"""Square-tiled surfaces given by a pair of gluing permutations.

An origami on ``n`` unit squares is a pair ``(sigma_a, sigma_b)`` of
permutations of the squares: ``sigma_a(s)`` is the square glued to the east
edge of ``s`` and ``sigma_b(s)`` the square glued to the north edge.  The
surface is connected exactly when the two permutations generate a transitive
group, which ``make_origami`` enforces.

Vertices of the induced square complex correspond to cycles of the commutator
``sigma_a^-1 sigma_b^-1 sigma_a sigma_b`` (applied left to right): the cycle
through ``s`` lists the squares whose lower-left corner is the given vertex,
in counterclockwise order.  A cycle of length L is a cone point of angle
``2*pi*L``, i.e. a zero of order ``L - 1`` of the translation structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perms import (
    Perm,
    check_permutation,
    commutator,
    compose,
    cycles,
    format_cycles,
    inverse,
    is_transitive,
    orbits,
    parse_cycles,
    relabel,
)


class NotConnectedError(ValueError):
    """Raised when gluing data does not give a connected surface."""

    def __init__(self, parts):
        self.orbits = parts
        super().__init__(
            f"surface is not connected: {len(parts)} components {parts}"
        )


@dataclass(frozen=True)
class Origami:
    sigma_a: Perm
    sigma_b: Perm
    # Set when the squares carry grid coordinates (tori and their
    # refinements): grid_k is the side length, coords[s] the lower-left
    # corner of square s in units of 1/grid_k.
    grid_k: int | None = field(default=None, compare=False)
    coords: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.sigma_a)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Origami({self.n} squares, a={format_cycles(self.sigma_a)!r}, b={format_cycles(self.sigma_b)!r})"


def make_origami(sigma_a, sigma_b, *, grid_k=None, coords=None) -> Origami:
    """Validate gluing data and build a connected origami.

    Raises ValueError on malformed permutations or degree mismatch and
    NotConnectedError (with the orbit partition attached) when the surface
    is disconnected.
    """
    a = check_permutation(sigma_a)
    b = check_permutation(sigma_b, len(a))
    parts = orbits([a, b], len(a))
    if len(parts) > 1:
        raise NotConnectedError(parts)
    return Origami(a, b, grid_k=grid_k, coords=coords)


def vertex_permutation(o: Origami) -> Perm:
    """Counterclockwise turn around lower-left corners; see module docstring."""
    return commutator(o.sigma_a, o.sigma_b)


@dataclass(frozen=True)
class VertexStructure:
    cycles: tuple[tuple[int, ...], ...]
    vertex_of: tuple[int, ...]  # square -> index into cycles

    @property
    def count(self) -> int:
        return len(self.cycles)

    def order(self, v: int) -> int:
        """Zero order of vertex v (0 for a regular point)."""
        return len(self.cycles[v]) - 1


def vertex_structure(o: Origami) -> VertexStructure:
    cyc = cycles(vertex_permutation(o))
    vertex_of = [0] * o.n
    for i, c in enumerate(cyc):
        for s in c:
            vertex_of[s] = i
    return VertexStructure(cyc, tuple(vertex_of))


def stratum(o: Origami) -> tuple[int, ...]:
    """Orders of the zeros, sorted decreasingly.  Empty for the torus.

    >>> stratum(torus(3))
    ()
    """
    vs = vertex_structure(o)
    return tuple(sorted((len(c) - 1 for c in vs.cycles if len(c) > 1), reverse=True))


def genus(o: Origami) -> int:
    vs = vertex_structure(o)
    # V - E + F = 2 - 2g with E = 2n, F = n.
    chi = vs.count - o.n
    if chi % 2:
        raise RuntimeError("odd Euler characteristic; gluing data corrupt")
    g = 1 - chi // 2
    assert sum(stratum(o)) == 2 * g - 2
    return g


def torus(k: int) -> Origami:
    """The k x k square torus.  Square (x, y) has index x + k*y and
    lower-left corner (x/k, y/k); sigma_a steps east, sigma_b north."""
    if k < 1:
        raise ValueError("torus side must be >= 1")
    sa = [0] * (k * k)
    sb = [0] * (k * k)
    pos = []
    for y in range(k):
        for x in range(k):
            i = x + k * y
            sa[i] = (x + 1) % k + k * y
            sb[i] = x + k * ((y + 1) % k)
            pos.append((x, y))
    return Origami(tuple(sa), tuple(sb), grid_k=k, coords=tuple(pos))


@dataclass(frozen=True)
class Refinement:
    """Result of cutting every square into a k x k block of subsquares.

    Subsquare (s, i, j) (row i from the bottom, column j from the left) gets
    index ``s*k*k + i*k + j``.  ``parent[t]`` recovers s.
    """

    origami: Origami
    k: int
    parent: tuple[int, ...]
    cell: tuple[tuple[int, int], ...]  # t -> (i, j)

    def index(self, s: int, i: int, j: int) -> int:
        k = self.k
        return s * k * k + i * k + j


def refine(o: Origami, k: int) -> Refinement:
    """Subdivide each square into k x k subsquares.

    The translation surface is unchanged; strata, genus and equivalence are
    preserved.  Crossing the east edge of column k-1 applies ``sigma_a`` to
    the parent square, likewise north/row/``sigma_b``.
    """
    if k < 1:
        raise ValueError("refinement factor must be >= 1")
    n = o.n
    kk = k * k
    sa = [0] * (n * kk)
    sb = [0] * (n * kk)
    parent = [0] * (n * kk)
    cell = [(0, 0)] * (n * kk)
    for s in range(n):
        for i in range(k):
            for j in range(k):
                t = s * kk + i * k + j
                parent[t] = s
                cell[t] = (i, j)
                if j + 1 < k:
                    sa[t] = s * kk + i * k + (j + 1)
                else:
                    sa[t] = o.sigma_a[s] * kk + i * k
                if i + 1 < k:
                    sb[t] = s * kk + (i + 1) * k + j
                else:
                    sb[t] = o.sigma_b[s] * kk + j
    grid_k = None
    coords = None
    if o.grid_k is not None and o.coords is not None:
        grid_k = o.grid_k * k
        pos = [(0, 0)] * (n * kk)
        for t in range(n * kk):
            x, y = o.coords[parent[t]]
            i, j = cell[t]
            pos[t] = (x * k + j, y * k + i)
        coords = tuple(pos)
    return Refinement(
        Origami(tuple(sa), tuple(sb), grid_k=grid_k, coords=coords),
        k,
        tuple(parent),
        tuple(cell),
    )


# ---------------------------------------------------------------------------
# Canonical forms.
#
# Relabeling squares by r turns (sigma_a, sigma_b) into the simultaneously
# conjugated pair; two origamis are equivalent iff some relabeling matches
# them.  A canonical representative is obtained by BFS-relabeling from every
# start square (neighbors explored in the fixed order sigma_a, sigma_a^-1,
# sigma_b, sigma_b^-1) and keeping the minimal relabeled pair, compared in
# the interleaved order sigma_a'[0], sigma_b'[0], sigma_a'[1], ...
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    pair: tuple[Perm, Perm]
    witness: Perm  # relabeling: old index -> canonical index


def _start_squares(sa: Perm, sb: Perm, sa_inv: Perm, sb_inv: Perm) -> list[int]:
    """Squares forming the smallest class of an isomorphism-invariant coloring.

    Seed colors are the cycle lengths through each square of the two gluings
    and of the vertex permutation; colors are then sharpened by neighbour
    colors until the smallest class is a singleton or the partition stops
    growing.  Any relabeling maps the chosen class onto the corresponding
    class of the relabeled surface, so a minimum over these starts is as
    canonical as a minimum over all of them.
    """
    n = len(sa)

    def cycle_lengths(p) -> list[int]:
        out = [0] * n
        for s in range(n):
            if out[s]:
                continue
            cyc = [s]
            x = p[s]
            while x != s:
                cyc.append(x)
                x = p[x]
            ln = len(cyc)
            for y in cyc:
                out[y] = ln
        return out

    comm = [sb[sa[sb_inv[sa_inv[s]]]] for s in range(n)]
    la, lb, lc = cycle_lengths(sa), cycle_lengths(sb), cycle_lengths(comm)
    m = n + 1
    keys = [(la[s] * m + lb[s]) * m + lc[s] for s in range(n)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    col = [ranks[k] for k in keys]
    classes = len(ranks)
    for _ in range(3):
        counts = [0] * classes
        for c in col:
            counts[c] += 1
        if min(counts) == 1 or classes == n:
            break
        keys = [
            (((col[s] * classes + col[sa[s]]) * classes + col[sb[s]]) * classes
             + col[sa_inv[s]]) * classes + col[sb_inv[s]]
            for s in range(n)
        ]
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        if len(ranks) == classes:
            break
        col = [ranks[k] for k in keys]
        classes = len(ranks)
    counts = [0] * classes
    for c in col:
        counts[c] += 1
    target = min(range(classes), key=lambda c: (counts[c], c))
    return [s for s in range(n) if col[s] == target]


def canonical_pair_inv(
    sa: Perm, sb: Perm, sa_inv: Perm, sb_inv: Perm
) -> tuple[tuple[Perm, Perm], Perm]:
    """Canonical form when the inverses are already at hand.

    Starts are restricted to one invariantly chosen color class (usually a
    single square), and work arrays are shared across starts with validity
    tracked by a stamp, so a start that compares larger early costs only
    the few steps it survives instead of an O(n) reset.
    """
    n = len(sa)
    gens = (sa, sa_inv, sb, sb_inv)
    new_of_old = [0] * n
    stamp = [-1] * n
    old_of_new = [0] * n
    cand = [0] * (2 * n)
    best = None
    best_relabel = None
    for start in _start_squares(sa, sb, sa_inv, sb_inv):
        stamp[start] = start
        new_of_old[start] = 0
        old_of_new[0] = start
        assigned = 1
        smaller = best is None
        dead = False
        for i in range(n):
            x = old_of_new[i]
            for g in gens:
                y = g[x]
                if stamp[y] != start:
                    stamp[y] = start
                    new_of_old[y] = assigned
                    old_of_new[assigned] = y
                    assigned += 1
            va = new_of_old[sa[x]]
            vb = new_of_old[sb[x]]
            k = 2 * i
            cand[k] = va
            cand[k + 1] = vb
            if not smaller:
                ba = best[k]
                if va != ba:
                    if va > ba:
                        dead = True
                        break
                    smaller = True
                else:
                    bb = best[k + 1]
                    if vb != bb:
                        if vb > bb:
                            dead = True
                            break
                        smaller = True
        if dead or not smaller:
            continue
        best = cand[:]
        best_relabel = new_of_old[:]
    ca = tuple(best[2 * i] for i in range(n))
    cb = tuple(best[2 * i + 1] for i in range(n))
    return (ca, cb), tuple(best_relabel)


def canonicalize(o: Origami) -> CanonicalForm:
    """Minimal BFS relabeling of ``o``; equal pairs <=> equivalent origamis."""
    sa, sb = o.sigma_a, o.sigma_b
    pair, witness = canonical_pair_inv(sa, sb, inverse(sa), inverse(sb))
    return CanonicalForm(pair, witness)


def canonical_key(o: Origami) -> tuple[Perm, Perm]:
    return canonicalize(o).pair


def relabel_origami(o: Origami, r: Perm) -> Origami:
    """Rename squares by ``r`` (new index of square i is ``r[i]``)."""
    return Origami(relabel(o.sigma_a, r), relabel(o.sigma_b, r))


def is_equivalent(o1: Origami, o2: Origami) -> bool:
    """Equality up to simultaneous relabeling of the squares."""
    if o1.n != o2.n:
        return False
    return canonical_key(o1) == canonical_key(o2)


# ---------------------------------------------------------------------------
# Text format.
#
#   squares: 8
#   a: (1,6,3,8)(2,5,4,7)
#   b: (1,2,3,4)(5,6,7,8)
#
# Keys in this order; '#' starts a comment; blank lines ignored.
# ---------------------------------------------------------------------------


def origami_to_text(o: Origami) -> str:
    lines = [
        f"squares: {o.n}",
        f"a: {format_cycles(o.sigma_a)}".rstrip(),
        f"b: {format_cycles(o.sigma_b)}".rstrip(),
    ]
    return "\n".join(lines) + "\n"


def origami_from_text(text: str) -> Origami:
    fields: dict[str, str] = {}
    order = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"malformed line {raw!r}")
        key, val = line.split(":", 1)
        key = key.strip()
        if key in fields:
            raise ValueError(f"duplicate key {key!r}")
        fields[key] = val.strip()
        order.append(key)
    if order != ["squares", "a", "b"]:
        raise ValueError(f"expected keys squares, a, b in order; got {order}")
    try:
        n = int(fields["squares"])
    except ValueError:
        raise ValueError(f"squares count is not an integer: {fields['squares']!r}") from None
    if n < 1:
        raise ValueError("squares count must be positive")
    sa = parse_cycles(fields["a"], n)
    sb = parse_cycles(fields["b"], n)
    return make_origami(sa, sb)


def save_origami(o: Origami, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(origami_to_text(o))


def load_origami(path) -> Origami:
    with open(path, "r", encoding="ascii") as fh:
        return origami_from_text(fh.read())
