"""Integral homology of an origami surface via a tree-cotree basis.

Cell structure: one square face per sheet, a horizontal edge ``h_s`` (bottom
side of square ``s``, oriented east, chain index ``s``) and a vertical edge
``v_s`` (left side, oriented north, chain index ``n + s``), and one vertex
per cycle of the corner permutation.  The boundary maps are

    d1(h_s) = V(sigma_a(s)) - V(s)
    d1(v_s) = V(sigma_b(s)) - V(s)
    d2(face s) = h_s + v_{sigma_a(s)} - h_{sigma_b(s)} - v_s

A spanning tree of the vertex graph and a spanning tree of the dual (face)
graph avoiding it are disjoint; the 2g edges in neither tree index a basis
of H_1.  Basis cycle ``B_x`` closes the edge ``x`` through the primal tree,
and leaf pruning on the dual tree produces integer cocycles ``u_x`` dual to
the ``B_x``.  The intersection pairing is recovered from the cup product
evaluated square by square: with ``C[i][j]`` the pairing of ``u_i`` and
``u_j`` against the fundamental class, ``Omega = -C^{-1}`` is the
intersection matrix of the basis cycles, integral, skew and of determinant
one.  All arithmetic is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .covering import CoveringMap
from .intlinalg import (
    Mat,
    Vec,
    det_exact,
    gram_matrix,
    inverse_unimodular,
    is_skew,
    kernel_lattice,
    lattice_intersection,
    mat_neg,
    omega_orthogonal,
)
from .perms import inverse
from .surface import Origami, VertexStructure, genus, vertex_structure


class RankUnexpectedError(RuntimeError):
    """A subspace came out with the wrong rank; signals a convention bug."""


def edge_endpoints(o: Origami, vs: VertexStructure, e: int) -> tuple[int, int]:
    """Tail and head vertex ids of edge ``e`` (``h_s`` for e < n, else ``v_s``)."""
    n = o.n
    if e < n:
        return vs.vertex_of[e], vs.vertex_of[o.sigma_a[e]]
    s = e - n
    return vs.vertex_of[s], vs.vertex_of[o.sigma_b[s]]


def face_boundary(o: Origami, f: int) -> dict[int, int]:
    """d2 of face ``f`` as a sparse edge vector, zero coefficients dropped."""
    n = o.n
    terms: dict[int, int] = {}
    for e, c in ((f, 1), (n + o.sigma_a[f], 1), (o.sigma_b[f], -1), (n + f, -1)):
        terms[e] = terms.get(e, 0) + c
    return {e: c for e, c in terms.items() if c}


def boundary_vector(o: Origami, vs: VertexStructure, z: Vec) -> Vec:
    """d1 of the edge chain ``z``, one integer per vertex."""
    out = [0] * vs.count
    for e, c in enumerate(z):
        if c:
            tail, head = edge_endpoints(o, vs, e)
            out[head] += c
            out[tail] -= c
    return tuple(out)


def is_cycle(o: Origami, vs: VertexStructure, z: Vec) -> bool:
    return not any(boundary_vector(o, vs, z))


@dataclass(frozen=True)
class HomologyData:
    """A 2g-cycle basis of H_1 with dual cocycles and intersection matrix.

    ``basis[i]`` and ``cocycles[i]`` are dense integer vectors of length 2n
    indexed by edges; ``cocycles[i]`` evaluates to 1 on ``basis[i]`` and to 0
    on the other basis cycles, so ``class_of`` is a single dot product per
    coordinate.  ``omega[i][j]`` is the signed intersection number of
    ``basis[i]`` and ``basis[j]``.
    """

    origami: Origami
    vertices: VertexStructure
    genus: int
    tree: frozenset[int]
    dual_tree: frozenset[int]
    leftover: tuple[int, ...]
    basis: tuple[Vec, ...]
    cocycles: tuple[Vec, ...]
    omega: Mat

    @property
    def rank(self) -> int:
        return len(self.basis)


def _primal_tree(o: Origami, vs: VertexStructure):
    """BFS spanning tree of the vertex graph; deterministic in edge order."""
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(vs.count)]
    for e in range(2 * o.n):
        tail, head = edge_endpoints(o, vs, e)
        if tail != head:
            adj[tail].append((head, e, 1))
            adj[head].append((tail, e, -1))
    parent: list[tuple[int, int, int] | None] = [None] * vs.count
    seen = [False] * vs.count
    seen[0] = True
    tree: set[int] = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, e, sign in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = (u, e, sign)
                tree.add(e)
                queue.append(w)
    if not all(seen):
        raise RuntimeError("vertex graph disconnected; gluing data corrupt")
    return tree, parent


def _dual_tree(o: Origami, tree: set[int]) -> set[int]:
    """BFS spanning tree of the face graph avoiding primal tree edges."""
    n = o.n
    a, b = o.sigma_a, o.sigma_b
    ainv, binv = inverse(a), inverse(b)
    seen = [False] * n
    seen[0] = True
    dual: set[int] = set()
    queue = deque([0])
    while queue:
        f = queue.popleft()
        moves = (
            (f, binv[f]),
            (b[f], b[f]),
            (n + f, ainv[f]),
            (n + a[f], a[f]),
        )
        for e, f2 in moves:
            if f2 == f or seen[f2] or e in tree:
                continue
            seen[f2] = True
            dual.add(e)
            queue.append(f2)
    if not all(seen):
        raise RuntimeError("face graph disconnected around the primal tree")
    return dual


def _cocycle(o, faces, dual_tree, edge_faces, x: int) -> Vec:
    """The cocycle that is 1 on leftover edge ``x``, 0 on the primal tree and
    the other leftover edges, solved on the dual tree by leaf pruning."""
    n = o.n
    u = [0] * (2 * n)
    u[x] = 1
    pending: list[set[int]] = []
    acc = [0] * n
    for f in range(n):
        pending.append({e for e in faces[f] if e in dual_tree})
        acc[f] = faces[f].get(x, 0)
    queue = deque(f for f in range(n) if len(pending[f]) == 1)
    solved = 0
    while queue:
        f = queue.popleft()
        if len(pending[f]) != 1:
            continue
        (e,) = pending[f]
        coeff = faces[f][e]  # always +-1 on a dual tree edge
        u[e] = -acc[f] * coeff
        pending[f].clear()
        solved += 1
        for f2 in edge_faces[e]:
            if f2 == f:
                continue
            acc[f2] += faces[f2][e] * u[e]
            pending[f2].discard(e)
            if len(pending[f2]) == 1:
                queue.append(f2)
    if solved != len(dual_tree):
        raise RuntimeError("dual tree pruning stalled; gluing data corrupt")
    for f in range(n):
        if sum(c * u[e] for e, c in faces[f].items()):
            raise RuntimeError("cocycle fails a square equation")
    return tuple(u)


@lru_cache(maxsize=None)
def homology_basis(o: Origami) -> HomologyData:
    """Compute a 2g integral basis of H_1 with its intersection matrix.

    >>> from .surface import torus
    >>> hd = homology_basis(torus(1))
    >>> hd.rank, hd.omega
    (2, ((0, 1), (-1, 0)))
    """
    vs = vertex_structure(o)
    n = o.n
    a, b = o.sigma_a, o.sigma_b
    g = genus(o)

    # d1 . d2 = 0, checked once per face.
    for f in range(n):
        bnd = [0] * vs.count
        for e, c in face_boundary(o, f).items():
            tail, head = edge_endpoints(o, vs, e)
            bnd[head] += c
            bnd[tail] -= c
        if any(bnd):
            raise RuntimeError("face boundary is not a cycle")

    tree, parent = _primal_tree(o, vs)
    dual_tree = _dual_tree(o, tree)
    leftover = tuple(
        e for e in range(2 * n) if e not in tree and e not in dual_tree
    )
    if len(leftover) != 2 * g:
        raise RankUnexpectedError(
            f"{len(leftover)} leftover edges for genus {g}"
        )

    def path_chain(v: int) -> list[int]:
        # tree chain from the root to vertex v
        vec = [0] * (2 * n)
        while parent[v] is not None:
            u_, e, sign = parent[v]
            vec[e] += sign
            v = u_
        return vec

    basis = []
    for x in leftover:
        tail, head = edge_endpoints(o, vs, x)
        z = path_chain(tail)
        for e, c in enumerate(path_chain(head)):
            z[e] -= c
        z[x] += 1
        if not is_cycle(o, vs, z):
            raise RuntimeError("basis chain fails to close up")
        basis.append(tuple(z))

    faces = [face_boundary(o, f) for f in range(n)]
    edge_faces: dict[int, tuple[int, int]] = {}
    ainv, binv = inverse(a), inverse(b)
    for e in dual_tree:
        edge_faces[e] = (e, binv[e]) if e < n else (e - n, ainv[e - n])
    cocycles = tuple(
        _cocycle(o, faces, dual_tree, edge_faces, x) for x in leftover
    )

    for i, u in enumerate(cocycles):
        for j, z in enumerate(basis):
            pairing = sum(uc * zc for uc, zc in zip(u, z))
            if pairing != (1 if i == j else 0):
                raise RuntimeError("cocycles are not dual to the basis")

    # Cup product against the fundamental class, square by square with the
    # lower-left to upper-right diagonal.
    shifted = []
    for u in cocycles:
        v_at_a = [u[n + a[s]] for s in range(n)]
        h_at_b = [u[b[s]] for s in range(n)]
        shifted.append((v_at_a, h_at_b))
    dim = len(cocycles)
    c_mat = []
    for i in range(dim):
        ui = cocycles[i]
        row = []
        for j in range(dim):
            v_at_a, h_at_b = shifted[j]
            row.append(
                sum(
                    ui[s] * v_at_a[s] - ui[n + s] * h_at_b[s]
                    for s in range(n)
                )
            )
        c_mat.append(tuple(row))
    c_mat = tuple(c_mat)
    if not is_skew(c_mat):
        raise RuntimeError("cup product pairing is not skew")
    omega = mat_neg(inverse_unimodular(c_mat))

    return HomologyData(
        origami=o,
        vertices=vs,
        genus=g,
        tree=frozenset(tree),
        dual_tree=frozenset(dual_tree),
        leftover=leftover,
        basis=tuple(basis),
        cocycles=cocycles,
        omega=omega,
    )


def class_of(hd: HomologyData, z: Vec) -> Vec:
    """Coordinates of the cycle ``z`` in the homology basis."""
    if not is_cycle(hd.origami, hd.vertices, z):
        raise ValueError("chain is not a cycle")
    return tuple(sum(uc * zc for uc, zc in zip(u, z)) for u in hd.cocycles)


def cycle_of_class(hd: HomologyData, coords: Vec) -> Vec:
    """An edge cycle representing the given basis coordinates."""
    z = [0] * (2 * hd.origami.n)
    for c, vec in zip(coords, hd.basis):
        if c:
            for e, val in enumerate(vec):
                z[e] += c * val
    return tuple(z)


def push_chain(c: CoveringMap, z: Vec) -> Vec:
    """Push an edge chain down a covering: h_s -> h_{c(s)}, v_s -> v_{c(s)}."""
    n_src = c.source.n
    n_dst = c.target.n
    out = [0] * (2 * n_dst)
    for s in range(n_src):
        if z[s]:
            out[c.square_map[s]] += z[s]
        if z[n_src + s]:
            out[n_dst + c.square_map[s]] += z[n_src + s]
    return tuple(out)


def pushforward_matrix(
    c: CoveringMap, hd_src: HomologyData, hd_dst: HomologyData
) -> Mat:
    """Matrix of the induced map on H_1, one column per source basis cycle."""
    if hd_src.origami is not c.source and hd_src.origami != c.source:
        raise ValueError("source homology does not match the covering")
    if hd_dst.origami is not c.target and hd_dst.origami != c.target:
        raise ValueError("target homology does not match the covering")
    cols = [class_of(hd_dst, push_chain(c, z)) for z in hd_src.basis]
    return tuple(tuple(col[i] for col in cols) for i in range(hd_dst.rank))


@dataclass(frozen=True)
class SplitSubspaces:
    """Row bases of the kernel/orthogonal splitting of H_1 under a torus map.

    ``h0`` is the kernel of the pushforward to the torus (rank 2g - 2),
    ``hst`` its orthogonal complement under the intersection form (rank 2).
    ``lifted`` is only present when a second, intermediate covering is given:
    the part of ``h0`` paired orthogonally against that covering's kernel.
    """

    h0: Mat
    hst: Mat
    lifted: Mat | None = None


def split_subspaces(
    hd: HomologyData, torus_push: Mat, intermediate_push: Mat | None = None
) -> SplitSubspaces:
    """Split H_1 along a degree-d torus covering, exactly over the integers.

    Raises :class:`RankUnexpectedError` when the pieces do not have ranks
    2g - 2 and 2 or the intersection form degenerates on one of them.
    """
    omega = hd.omega
    h0 = kernel_lattice(torus_push)
    if len(h0) != hd.rank - 2:
        raise RankUnexpectedError(
            f"kernel of the torus pushforward has rank {len(h0)}, "
            f"expected {hd.rank - 2}"
        )
    hst = omega_orthogonal(omega, h0)
    if len(hst) != 2:
        raise RankUnexpectedError(
            f"orthogonal complement has rank {len(hst)}, expected 2"
        )
    for name, rows in (("h0", h0), ("hst", hst)):
        if det_exact(gram_matrix(omega, rows)) == 0:
            raise RankUnexpectedError(
                f"intersection form degenerates on {name}"
            )
    lifted = None
    if intermediate_push is not None:
        orth = omega_orthogonal(omega, kernel_lattice(intermediate_push))
        lifted = lattice_intersection(h0, orth)
    return SplitSubspaces(h0=h0, hst=hst, lifted=lifted)
