"""Action of affine diffeomorphisms on the homology of an origami.

Each generator letter (T, S and their inverses t, s) acts on the gluing data
through :func:`origami.veech.apply_generator` and lifts to an explicit chain
map on edges:

    T: h_s -> h_s            v_s -> h_s + v_{sigma_a(s)}
    t: h_s -> h_s            v_s -> v_{sigma_a^-1(s)} - h_{sigma_a^-1(s)}
    S: h_s -> v_{sigma_b^-1(s)}          v_s -> -h_s
    s: h_s -> -v_s           v_s -> h_{sigma_a^-1(s)}

(indices on the right refer to the image origami; sigma_a, sigma_b to the
source).  The shear fixes every lower-left corner, while the rotations move
the corner of square s to the corner of sigma_b^-1(s) (for S) or
sigma_a^-1(s) (for s); the ``square_map`` of a step records this corner
tracking, which is what permutes cone and marked points.  Composing the
steps along a word that returns to the starting equivalence class, then
closing up with the relabeling found from canonical forms, gives the induced
integer matrix on H_1.  It is always symplectic for the intersection form.

Translation automorphisms are the relabelings commuting with both gluing
permutations; they act on homology with derivative I and complete the
letter-generated actions to the full affine group, whose finite level data
(derivative mod N, marked-point permutation, matrix on an invariant
sublattice) is enumerated by :func:`monodromy_closure`.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from hashlib import blake2b
from typing import Mapping, Sequence

from .covering import CoveringMap, cover_from_map
from .homology import HomologyData, class_of, cycle_of_class, homology_basis
from .intlinalg import (
    LatticeSolver,
    Mat,
    Vec,
    identity_matrix,
    is_symplectic,
    mat_mul,
    restrict_action,
)
from .perms import Perm, compose, identity, inverse
from .sl2 import (
    Mat2,
    invert_word,
    mat_mul as mat2_mul,
    reduce_mod,
    reduce_word,
    word_to_matrix,
)
from .surface import (
    Origami,
    canonical_pair_inv,
    canonicalize,
    relabel_origami,
    vertex_structure,
)
from .veech import CapExceededError, apply_generator, orbit_cap

EdgeImages = tuple[tuple[tuple[int, int], ...], ...]

IDENTITY_2 = ((1, 0), (0, 1))


def letter_step(o: Origami, letter: str) -> tuple[Origami, EdgeImages, Perm]:
    """One generator step: image origami, chain images of the 2n edges of
    ``o`` (as sparse ``(edge, coefficient)`` pairs in the image), and the
    square map tracking lower-left corners."""
    n = o.n
    a, b = o.sigma_a, o.sigma_b
    o2 = apply_generator(o, letter)
    if letter == "T":
        h = [((s, 1),) for s in range(n)]
        v = [((s, 1), (n + a[s], 1)) for s in range(n)]
        corner = identity(n)
    elif letter == "t":
        ai = inverse(a)
        h = [((s, 1),) for s in range(n)]
        v = [((ai[s], -1), (n + ai[s], 1)) for s in range(n)]
        corner = identity(n)
    elif letter == "S":
        bi = inverse(b)
        h = [((n + bi[s], 1),) for s in range(n)]
        v = [((s, -1),) for s in range(n)]
        corner = bi
    elif letter == "s":
        ai = inverse(a)
        h = [((n + s, -1),) for s in range(n)]
        v = [((ai[s], 1),) for s in range(n)]
        corner = ai
    else:
        raise ValueError(f"bad generator letter {letter!r}")
    return o2, tuple(h + v), corner


@dataclass(frozen=True)
class Transport:
    """Edge vectors carried along a word, with the composite corner map."""

    origami: Origami
    vectors: tuple[Vec, ...]
    square_map: Perm


def transport(o: Origami, word: str, vectors: Sequence[Vec]) -> Transport:
    """Carry edge chains through the word, rightmost letter first."""
    cur = o
    vecs = [list(v) for v in vectors]
    track = identity(o.n)
    for letter in reversed(word):
        cur2, images, corner = letter_step(cur, letter)
        size = 2 * cur2.n
        moved = []
        for v in vecs:
            out = [0] * size
            for e, c in enumerate(v):
                if c:
                    for e2, c2 in images[e]:
                        out[e2] += c * c2
            moved.append(out)
        vecs = moved
        track = compose(track, corner)
        cur = cur2
    return Transport(cur, tuple(tuple(v) for v in vecs), track)


def relabeling_onto(o_end: Origami, o: Origami) -> Perm:
    """The relabeling carrying ``o_end`` onto ``o``, via canonical witnesses.

    Raises ``ValueError`` when the two are not equivalent, i.e. the word that
    produced ``o_end`` does not stabilize ``o``.
    """
    if o_end.sigma_a == o.sigma_a and o_end.sigma_b == o.sigma_b:
        return identity(o.n)
    cf_end = canonicalize(o_end)
    cf_o = canonicalize(o)
    if cf_end.pair != cf_o.pair:
        raise ValueError("word does not stabilize the surface")
    r = compose(cf_end.witness, inverse(cf_o.witness))
    back = relabel_origami(o_end, r)
    if back.sigma_a != o.sigma_a or back.sigma_b != o.sigma_b:
        raise RuntimeError("canonical witnesses fail to intertwine")
    return r


def relabel_chain(z: Vec, r: Perm) -> Vec:
    """Push an edge chain through a square relabeling."""
    n = len(z) // 2
    out = [0] * (2 * n)
    for s in range(n):
        out[r[s]] += z[s]
        out[n + r[s]] += z[n + s]
    return tuple(out)


@dataclass(frozen=True)
class AffineAction:
    """An affine diffeomorphism seen on homology and on marked points.

    ``matrix`` acts on column vectors of basis coordinates; ``vertex_perm``
    sends vertex ids of the origami to vertex ids; ``square_map`` is the
    underlying corner tracking (a relabeling for translation automorphisms,
    the word transport closed up by a relabeling otherwise).
    """

    origami: Origami
    word: str
    derivative: Mat2
    matrix: Mat
    vertex_perm: Perm
    square_map: Perm


def _vertex_perm(o: Origami, sq_map: Perm) -> Perm:
    vs = vertex_structure(o)
    out = [-1] * vs.count
    for vid, cyc in enumerate(vs.cycles):
        images = {vs.vertex_of[sq_map[s]] for s in cyc}
        if len(images) != 1:
            raise RuntimeError("corner tracking split a vertex")
        target = images.pop()
        if len(vs.cycles[target]) != len(cyc):
            raise RuntimeError("corner tracking changed a cone angle")
        out[vid] = target
    if sorted(out) != list(range(vs.count)):
        raise RuntimeError("corner tracking is not a vertex bijection")
    return tuple(out)


def affine_action(o: Origami, word: str, hd: HomologyData | None = None) -> AffineAction:
    """Homology matrix and vertex permutation of the lift of ``word``.

    The word must stabilize the equivalence class of ``o``; the specific
    lift is pinned down by the deterministic canonical-form witness.
    """
    if hd is None:
        hd = homology_basis(o)
    tr = transport(o, word, hd.basis)
    r = relabeling_onto(tr.origami, o)
    sq_map = compose(tr.square_map, r)
    cols = [class_of(hd, relabel_chain(z, r)) for z in tr.vectors]
    matrix = tuple(tuple(col[i] for col in cols) for i in range(hd.rank))
    if not is_symplectic(matrix, hd.omega):
        raise RuntimeError("affine action is not symplectic")
    return AffineAction(
        origami=o,
        word=word,
        derivative=word_to_matrix(word),
        matrix=matrix,
        vertex_perm=_vertex_perm(o, sq_map),
        square_map=sq_map,
    )


def centralizer(a: Perm, b: Perm) -> list[Perm]:
    """All permutations commuting with both ``a`` and ``b``.

    Assumes joint transitivity, so an element is determined by the image of
    square 0; candidates are grown by a consistency propagation.
    """
    n = len(a)
    found = []
    for t in range(n):
        pi = [-1] * n
        pi[0] = t
        queue = [0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for gen in (a, b):
                y = gen[x]
                want = gen[pi[x]]
                if pi[y] == -1:
                    pi[y] = want
                    queue.append(y)
                elif pi[y] != want:
                    ok = False
                    break
        if not ok or -1 in pi or len(set(pi)) != n:
            continue
        if all(pi[a[x]] == a[pi[x]] and pi[b[x]] == b[pi[x]] for x in range(n)):
            found.append(tuple(pi))
    return found


def translation_automorphisms(
    o: Origami, hd: HomologyData | None = None
) -> tuple[AffineAction, ...]:
    """The translation group of the surface acting on homology.

    Every element has derivative I; the identity is included first.
    """
    if hd is None:
        hd = homology_basis(o)
    actions = []
    for pi in sorted(centralizer(o.sigma_a, o.sigma_b)):
        cols = [class_of(hd, relabel_chain(z, pi)) for z in hd.basis]
        matrix = tuple(tuple(col[i] for col in cols) for i in range(hd.rank))
        if not is_symplectic(matrix, hd.omega):
            raise RuntimeError("translation action is not symplectic")
        actions.append(
            AffineAction(
                origami=o,
                word="",
                derivative=IDENTITY_2,
                matrix=matrix,
                vertex_perm=_vertex_perm(o, pi),
                square_map=pi,
            )
        )
    return tuple(actions)


def word_action_on_rows(
    o: Origami, hd: HomologyData, word: str, rows: Sequence[Vec]
) -> Mat:
    """Matrix of the lift of ``word`` restricted to the sublattice ``rows``.

    Transports only the given basis cycles, so it stays cheap on large
    surfaces.  Raises if the sublattice is not invariant.
    """
    cycles = [cycle_of_class(hd, r) for r in rows]
    tr = transport(o, word, cycles)
    r = relabeling_onto(tr.origami, o)
    solver = LatticeSolver(rows)
    cols = [solver.int_coords(class_of(hd, relabel_chain(z, r))) for z in tr.vectors]
    k = len(rows)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def letter_descends(c: CoveringMap, letter: str) -> bool:
    """The letter's chain map commutes with pushforward through ``c``.

    Applying a generator to both sides of a covering keeps the same square
    map a covering (the gluing intertwining is preserved), and the edge
    images downstairs match the pushed edge images upstairs.  Both facts
    are checked directly; together they let homology actions upstairs be
    read off from actions downstairs.
    """
    up2, im_up, _ = letter_step(c.source, letter)
    dn2, im_dn, _ = letter_step(c.target, letter)
    try:
        cover_from_map(up2, dn2, c.square_map)
    except ValueError:
        return False
    n_up, n_dn = c.source.n, c.target.n
    f = c.square_map

    def push_edge(e: int) -> int:
        return f[e] if e < n_up else n_dn + f[e - n_up]

    for e in range(2 * n_up):
        want: dict[int, int] = {}
        for e2, coef in im_dn[push_edge(e)]:
            want[e2] = want.get(e2, 0) + coef
        got: dict[int, int] = {}
        for e2, coef in im_up[e]:
            k = push_edge(e2)
            got[k] = got.get(k, 0) + coef
        if {k: v for k, v in got.items() if v} != {k: v for k, v in want.items() if v}:
            return False
    return True


@dataclass(frozen=True)
class DescentCertificate:
    """Stabilizer generators of an orbit certified through finite data.

    The orbit BFS runs once.  Each state carries the derivative of its
    entry word reduced mod ``level`` (a table id, since the derivatives
    live in the finite group SL(2, Z/level)) and, when a covering ``down``
    is supplied, the induced permutation of the zeros of the base state.
    Every Schreier generator (one per non-tree edge) is then tested by
    table lookups: derivative congruent to the identity, and preservation
    of each fiber of the zero map of ``down``.  Fiber preservation means
    the generator's descent fixes every zero downstairs that is hit by a
    zero upstairs; with ``zero_map_onto`` true that is all of them.

    The zero transport composes corner maps with canonical relabelings,
    which is unambiguous only when the surface has no translation
    automorphisms; construction fails otherwise.
    """

    orbit_index: int
    generator_count: int
    level: int
    gamma_ok: bool
    gamma_failures: int
    fibers_checked: bool
    fibers_preserved: bool
    fiber_failures: int
    zero_map_onto: bool
    zero_count: int
    failing_words: tuple[str, ...]


def descent_certificate(
    o: Origami,
    level: int,
    *,
    down: CoveringMap | None = None,
    cap: int | None = None,
    max_failing_words: int = 4,
) -> DescentCertificate:
    """Certify all stabilizer generators of ``o`` at once.

    Always reports whether every Schreier generator's derivative is the
    identity mod ``level``, which is exact word arithmetic.  With ``down``
    (a covering of ``o``), additionally reports whether every generator
    permutes the zeros of ``o`` within the fibers of the covering's zero
    map; chain naturality of the generator letters through ``down`` is
    verified first and a failure raises, since the downstairs reading of
    the result depends on it.

    A generator preserving every zero fiber descends to an affine map of
    the target fixing each zero hit from upstairs; combined with a
    finite-closure predicate on the target (derivative trivial mod level
    and zeros fixed force plus or minus the identity on an invariant
    subspace), this pins the generator's action on any upstairs subspace
    pushing isomorphically onto it.  See
    :func:`origami.verify.isotropic_witness_x` for the assembled argument.
    """
    if cap is None:
        cap = orbit_cap()
    check_fibers = down is not None
    base = canonicalize(o)
    base_a, base_b = base.pair
    n = o.n

    zero_cycles: list[tuple[int, ...]] = []
    fiber_of: list[int] = []
    zero_map_onto = False
    if check_fibers:
        if down.source != o:
            raise ValueError("the covering does not start at the given origami")
        if len(centralizer(o.sigma_a, o.sigma_b)) != 1:
            raise ValueError(
                "zero transport needs a surface without translation "
                "automorphisms"
            )
        for letter in ("T", "S"):
            if not letter_descends(down, letter):
                raise RuntimeError(
                    f"letter {letter} does not descend through the covering"
                )
        # zeros of the canonical base state, numbered by smallest square
        vs = vertex_structure(Origami(base_a, base_b))
        zero_cycles = [c for c in vs.cycles if len(c) > 1]
        # fiber label of each zero: the zero of the target below it
        w_inv = inverse(base.witness)
        vs_dn = vertex_structure(down.target)
        f = down.square_map
        for cyc in zero_cycles:
            labels = {vs_dn.vertex_of[f[w_inv[s]]] for s in cyc}
            if len(labels) != 1:
                raise RuntimeError("covering does not respect vertices")
            fiber_of.append(labels.pop())
        zeros_dn = {
            v for v, c in enumerate(vs_dn.cycles) if len(c) > 1
        }
        zero_map_onto = set(fiber_of) >= zeros_dn

    letter_d = {
        letter: reduce_mod(word_to_matrix(letter), level) for letter in ("T", "S")
    }
    d_table: list[Mat2] = [reduce_mod(IDENTITY_2, level)]
    d_ids: dict[Mat2, int] = {d_table[0]: 0}
    d_step: dict[tuple[str, int], int] = {}

    def d_product(letter: str, i: int) -> int:
        key = (letter, i)
        j = d_step.get(key)
        if j is None:
            m = reduce_mod(mat2_mul(letter_d[letter], d_table[i]), level)
            j = d_ids.setdefault(m, len(d_table))
            if j == len(d_table):
                d_table.append(m)
            d_step[key] = j
        return j

    code = "H" if n < 1 << 16 else "I"

    def pack(pa, pb) -> bytes:
        buf = array(code, pa)
        buf.extend(pb)
        return buf.tobytes()

    def entry_word(state: int) -> str:
        letters = []
        while state:
            letters.append(chr(parent_letter[state]))
            state = parent[state]
        return "".join(letters)

    z = len(zero_cycles)
    ident_z = bytes(range(z))
    packed = pack(base_a, base_b)
    seen: dict[bytes, int] = {blake2b(packed, digest_size=16).digest(): 0}
    # per-state tables: derivative id, parent edge, zero transport
    d_state = array("I", (0,))
    parent = array("I", (0,))
    parent_letter = array("B", (0,))
    z_state: list[bytes] = [ident_z]
    # frontier: (state, packed pair); zero cycles are recomputed on pop
    queue: deque[tuple[int, bytes]] = deque([(0, packed)])
    index = 1
    generators = 0
    gamma_failures = 0
    fiber_failures = 0
    failing: list[str] = []
    while queue:
        i, buf = queue.popleft()
        half = len(buf) // 2
        a = tuple(array(code, buf[:half]))
        b = tuple(array(code, buf[half:]))
        ai, bi = inverse(a), inverse(b)
        tb = tuple(b[ai[s]] for s in range(n))
        tbi = tuple(a[bi[s]] for s in range(n))
        zcyc: list[tuple[int, ...]] = []
        if check_fibers:
            # nontrivial commutator cycles, ordered by smallest square to
            # match the numbering used when the state's transport was stored
            done = bytearray(n)
            for start in range(n):
                if done[start]:
                    continue
                cyc = [start]
                done[start] = 1
                s = b[a[bi[ai[start]]]]
                while s != start:
                    cyc.append(s)
                    done[s] = 1
                    s = b[a[bi[ai[s]]]]
                if len(cyc) > 1:
                    zcyc.append(tuple(cyc))
        for letter, pair_inv, corner in (
            ("T", (a, tb, ai, tbi), None),
            ("S", (bi, a, b, ai), bi),
        ):
            key, wit = canonical_pair_inv(*pair_inv)
            packed = pack(*key)
            dg = blake2b(packed, digest_size=16).digest()
            j = seen.get(dg)
            new = j is None
            zedge: list[int] = []
            imgs: list[tuple[int, ...]] = []
            if check_fibers:
                # zeros of the image state are the images of the zeros,
                # renumbered by smallest square
                if corner is None:
                    imgs = [tuple(wit[s] for s in cyc) for cyc in zcyc]
                else:
                    imgs = [tuple(wit[corner[s]] for s in cyc) for cyc in zcyc]
                order = sorted(range(z), key=lambda k: min(imgs[k]))
                zedge = [0] * z
                for r_, k in enumerate(order):
                    zedge[k] = r_
            if new:
                j = len(seen)
                if j >= cap:
                    raise CapExceededError("orbit enumeration", cap)
                seen[dg] = j
                index += 1
                d_state.append(d_product(letter, d_state[i]))
                parent.append(i)
                parent_letter.append(ord(letter))
                if check_fibers:
                    zi = z_state[i]
                    z_state.append(bytes(zedge[zi[k]] for k in range(z)))
                queue.append((j, packed))
                continue
            generators += 1
            bad = False
            if d_product(letter, d_state[i]) != d_state[j]:
                gamma_failures += 1
                bad = True
            if check_fibers:
                zi, zj = z_state[i], z_state[j]
                inv_zj = [0] * z
                for k in range(z):
                    inv_zj[zj[k]] = k
                for k in range(z):
                    if fiber_of[inv_zj[zedge[zi[k]]]] != fiber_of[k]:
                        fiber_failures += 1
                        bad = True
                        break
            if bad and len(failing) < max_failing_words:
                failing.append(
                    reduce_word(
                        invert_word(entry_word(j)) + letter + entry_word(i)
                    )
                )
    return DescentCertificate(
        orbit_index=index,
        generator_count=generators,
        level=level,
        gamma_ok=gamma_failures == 0,
        gamma_failures=gamma_failures,
        fibers_checked=check_fibers,
        fibers_preserved=check_fibers and fiber_failures == 0,
        fiber_failures=fiber_failures,
        zero_map_onto=zero_map_onto,
        zero_count=z,
        failing_words=tuple(failing),
    )


@dataclass(frozen=True)
class ClosureState:
    """Group element data at finite level: derivative mod N, permutation of
    the marked vertices (by position in the marked tuple), and the integer
    matrix on the chosen sublattice."""

    derivative: Mat2
    marked_perm: Perm
    matrix: Mat


@dataclass(frozen=True)
class Closure:
    """The finite image of the affine group at level N.

    ``witness`` maps each state to a word over T, S and ``@k`` (the k-th
    translation automorphism), rightmost factor applied first.
    """

    origami: Origami
    level: int
    marked_names: tuple[str, ...]
    marked_ids: tuple[int, ...]
    states: tuple[ClosureState, ...]
    witness: Mapping[ClosureState, str]

    @property
    def group_size(self) -> int:
        return len(self.states)


def _restrict_marked(
    vertex_perm: Perm, marked_ids: Sequence[int]
) -> Perm:
    pos = {vid: i for i, vid in enumerate(marked_ids)}
    out = []
    for vid in marked_ids:
        image = vertex_perm[vid]
        if image not in pos:
            raise ValueError("marked set is not invariant under the action")
        out.append(pos[image])
    return tuple(out)


def monodromy_closure(
    o: Origami,
    level: int,
    marked: Mapping[str, int] | Sequence[int],
    restrict_to: Sequence[Vec] | None = None,
    hd: HomologyData | None = None,
    cap: int | None = None,
) -> Closure:
    """Enumerate the affine group's image on (level, marked points, lattice).

    Generated by the lifts of T and S together with all translation
    automorphisms; the closure is finite exactly when the matrix part has
    finite image, otherwise the state count passes ``cap`` and
    :class:`CapExceededError` is raised.
    """
    if hd is None:
        hd = homology_basis(o)
    if isinstance(marked, Mapping):
        marked_names = tuple(marked.keys())
        marked_ids = tuple(marked.values())
    else:
        marked_ids = tuple(marked)
        marked_names = tuple(str(v) for v in marked_ids)
    if restrict_to is None:
        restrict_to = [list(row) for row in identity_matrix(hd.rank)]
    if cap is None:
        cap = orbit_cap()

    gens: list[tuple[str, ClosureState]] = []
    for letter in ("T", "S"):
        act = affine_action(o, letter, hd)
        gens.append(
            (
                letter,
                ClosureState(
                    derivative=reduce_mod(act.derivative, level),
                    marked_perm=_restrict_marked(act.vertex_perm, marked_ids),
                    matrix=tuple(
                        tuple(row)
                        for row in restrict_action(act.matrix, restrict_to)
                    ),
                ),
            )
        )
    for k, act in enumerate(translation_automorphisms(o, hd)):
        if act.square_map == identity(o.n):
            continue
        gens.append(
            (
                f"@{k}",
                ClosureState(
                    derivative=reduce_mod(IDENTITY_2, level),
                    marked_perm=_restrict_marked(act.vertex_perm, marked_ids),
                    matrix=tuple(
                        tuple(row)
                        for row in restrict_action(act.matrix, restrict_to)
                    ),
                ),
            )
        )

    dim = len(restrict_to)
    start = ClosureState(
        derivative=reduce_mod(IDENTITY_2, level),
        marked_perm=identity(len(marked_ids)),
        matrix=tuple(tuple(row) for row in identity_matrix(dim)),
    )
    witness: dict[ClosureState, str] = {start: ""}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for name, gen in gens:
                new = ClosureState(
                    derivative=reduce_mod(
                        mat2_mul(gen.derivative, state.derivative), level
                    ),
                    marked_perm=compose(state.marked_perm, gen.marked_perm),
                    matrix=tuple(
                        tuple(row) for row in mat_mul(gen.matrix, state.matrix)
                    ),
                )
                if new in witness:
                    continue
                if len(witness) >= cap:
                    raise CapExceededError("monodromy closure", cap)
                witness[new] = name + witness[state]
                nxt.append(new)
        frontier = nxt
    return Closure(
        origami=o,
        level=level,
        marked_names=marked_names,
        marked_ids=marked_ids,
        states=tuple(witness.keys()),
        witness=witness,
    )


@dataclass(frozen=True)
class ClosureCheck:
    """Outcome of a predicate over every state of a closure."""

    closure: Closure
    predicate: str
    holds: bool
    counterexample: str | None

    def to_json(self) -> dict:
        out = {
            "level": self.closure.level,
            "marked": list(self.closure.marked_names),
            "group_size": self.closure.group_size,
            "predicate": self.predicate,
            "holds": self.holds,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _is_trivial_data(state: ClosureState, level: int) -> bool:
    return state.derivative == reduce_mod(IDENTITY_2, level) and state.marked_perm == identity(len(state.marked_perm))


def _is_pm_identity(matrix: Mat) -> bool:
    dim = len(matrix)
    ident = identity_matrix(dim)
    return all(
        list(matrix[i]) == list(ident[i]) for i in range(dim)
    ) or all(
        list(matrix[i]) == [-x for x in ident[i]] for i in range(dim)
    )


def check_pm_id(closure: Closure) -> ClosureCheck:
    """Trivial level data forces the matrix to be plus or minus identity."""
    for state in closure.states:
        if _is_trivial_data(state, closure.level) and not _is_pm_identity(
            state.matrix
        ):
            return ClosureCheck(closure, "pm_id", False, closure.witness[state])
    return ClosureCheck(closure, "pm_id", True, None)


def check_iff_trivial(closure: Closure) -> ClosureCheck:
    """Matrix is the identity exactly when the level data is trivial."""
    dim = len(closure.states[0].matrix)
    ident = tuple(tuple(row) for row in identity_matrix(dim))
    for state in closure.states:
        if (state.matrix == ident) != _is_trivial_data(state, closure.level):
            return ClosureCheck(
                closure, "iff_trivial", False, closure.witness[state]
            )
    return ClosureCheck(closure, "iff_trivial", True, None)
