"""A small zoo of named square-tiled surfaces and coverings between them.

The surfaces here form two towers over elliptic curves:

* the Eierlegende Wollmilchsau ``ew`` (8 squares, genus 3, stratum
  H(1,1,1,1), a quaternion-group cover of the square torus) and a 512-square
  genus-15 surface ``x512`` built from its 4-fold subdivision ``ew128`` by
  regluing four leaves along short slits;

* the Ornithorynque ``m4`` (12 squares, genus 4, stratum H(2,2,2), a
  degree-3 cover of the 2x2 torus), a connected double cover ``m4tilde``
  branched over two of its regular marked points, a family ``y:n`` of n-fold
  voltage covers of the 6x6 torus, and the glued products ``covm4:n`` of the
  two towers over the 6x6 torus (216n squares).

Every builder returns a :class:`NamedSurface` bundling the origami, the
coverings it comes with, and the marked vertices used downstream.  CLI names
(``ew``, ``ew128``, ``x512``, ``m4``, ``m4tilde``, ``y:<n>``, ``covm4:<n>``,
``torus:<k>``) are resolved by :func:`from_spec`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .covering import (
    CoveringMap,
    VoltageData,
    compose_covers,
    cover_from_map,
    rebase_to_grid,
    refine_cover,
    voltage_cover,
)
from .fibre import FibreProduct, fake_fibre_product
from .perms import Perm, parse_cycles
from .surface import Origami, Refinement, make_origami, refine, torus, vertex_structure


@dataclass(frozen=True)
class NamedSurface:
    name: str
    origami: Origami
    covers: dict[str, CoveringMap] = field(default_factory=dict)
    marked: dict[str, int] = field(default_factory=dict)  # name -> vertex id
    warning: str | None = None

    @property
    def zeros(self) -> tuple[int, ...]:
        vs = vertex_structure(self.origami)
        return tuple(v for v in range(vs.count) if len(vs.cycles[v]) > 1)


def _perm(text: str, n: int) -> Perm:
    return parse_cycles(text, n)


@lru_cache(maxsize=None)
def build_ew() -> NamedSurface:
    """Eierlegende Wollmilchsau: 8 squares, H(1,1,1,1), genus 3.

    The squares are the elements of the quaternion group; east gluing is
    right multiplication by i, north by j.  Projection to the unit torus has
    degree 8 and is branched over the lattice point only.
    """
    o = make_origami(
        _perm("(1,6,3,8)(2,5,4,7)", 8),
        _perm("(1,2,3,4)(5,6,7,8)", 8),
    )
    pi = cover_from_map(o, torus(1), [0] * 8)
    return NamedSurface("ew", o, covers={"pi": pi})


@lru_cache(maxsize=None)
def build_ew128() -> tuple[NamedSurface, Refinement]:
    """The 4x4 subdivision of ``ew`` with its degree-8 cover of the 4x4 torus."""
    ew = build_ew()
    r = refine(ew.origami, 4)
    pi4 = refine_cover(ew.covers["pi"], 4)
    assert pi4.source == r.origami
    return NamedSurface("ew128", r.origami, covers={"pi": pi4}), r


# Leaf regluings for x512.  Crossing east out of the bottom-right subsquare
# of squares 1, 2, 6 permutes the four leaves by pi1, pi2, pi3; crossing
# north out of the top-right subsquare of square 4 applies pi4.
_X_LEAF_A = {1: "(1,3)(2,4)", 2: "(1,2)", 6: "(1,3)(2,4)"}
_X_LEAF_B = {4: "(1,3,2)"}


@lru_cache(maxsize=None)
def build_x512() -> NamedSurface:
    """512-square genus-15 surface: four reglued leaves of ``ew128``.

    Comes with ``p`` (degree 4, to ``ew128``) and ``q`` (degree 32, to the
    4x4 torus).  Slit endpoints that are not zeros sit over the torus points
    (0, 1/4) and (3/4, 0); all seventeen zeros are visible in the vertex
    structure, giving stratum H(5,3,3,3,2,1^12).
    """
    ew128, r = build_ew128()
    w_a = {
        r.index(s - 1, 0, 3): _perm(text, 4) for s, text in _X_LEAF_A.items()
    }
    w_b = {
        r.index(s - 1, 3, 3): _perm(text, 4) for s, text in _X_LEAF_B.items()
    }
    volt = VoltageData(ew128.origami, 4, w_a, w_b)
    total, p = voltage_cover(volt)
    q = compose_covers(p, ew128.covers["pi"])
    return NamedSurface("x512", total, covers={"p": p, "q": q})


def x512_voltages() -> VoltageData:
    """The regluing data of ``x512`` (used for local monodromy checks)."""
    ew128, r = build_ew128()
    w_a = {r.index(s - 1, 0, 3): _perm(t, 4) for s, t in _X_LEAF_A.items()}
    w_b = {r.index(s - 1, 3, 3): _perm(t, 4) for s, t in _X_LEAF_B.items()}
    return VoltageData(ew128.origami, 4, w_a, w_b)


@lru_cache(maxsize=None)
def build_m4() -> NamedSurface:
    """Ornithorynque: 12 squares, H(2,2,2), genus 4.

    Degree-3 cover ``pi2`` of the 2x2 torus.  Marked vertices: the three
    regular points A1, A2, A3 over the corner A = (0,0) and the three zeros
    X1, Y1, Z1 over the remaining three half-integer points.
    """
    o = make_origami(
        _perm("(1,2,3,4,5,6)(7,8,9,10,11,12)", 12),
        _perm("(1,11,5,7,3,9)(2,12,4,10,6,8)", 12),
    )
    t2 = torus(2)
    # (x, y) position of each square on the 2x2 torus; index x + 2y.
    pos = {8: (0, 0), 10: (0, 0), 12: (0, 0),
           9: (1, 0), 11: (1, 0), 7: (1, 0),
           2: (0, 1), 6: (0, 1), 4: (0, 1),
           1: (1, 1), 5: (1, 1), 3: (1, 1)}
    sq_map = [0] * 12
    for s, (x, y) in pos.items():
        sq_map[s - 1] = x + 2 * y
    pi2 = cover_from_map(o, t2, sq_map)
    vs = vertex_structure(o)
    marked = {
        "A1": vs.vertex_of[7],
        "A2": vs.vertex_of[9],
        "A3": vs.vertex_of[11],
        "X1": vs.vertex_of[8],
        "Y1": vs.vertex_of[0],
        "Z1": vs.vertex_of[1],
    }
    return NamedSurface("m4", o, covers={"pi2": pi2}, marked=marked)


@lru_cache(maxsize=None)
def build_m4_tilde() -> NamedSurface:
    """Connected double cover of ``m4`` branched over A1 and A2.

    24 squares, stratum H(2,2,2,2,2,2,1,1), genus 8.  ``h`` folds the two
    copies onto ``m4``; ``pi2t`` is the degree-6 composition down to the 2x2
    torus.  Marked: the branch points hatA1, hatA2 and the two points
    hatA3_1, hatA3_2 over A3.
    """
    o = make_origami(
        _perm(
            "(1,2,3,4,5,6)(13,14,15,16,17,18)(8,9,22,23,24,19)(20,21,10,11,12,7)",
            24,
        ),
        _perm(
            "(1,11,5,7,3,9)(2,12,4,10,6,8)(13,23,17,19,15,21)(14,24,16,22,18,20)",
            24,
        ),
    )
    m4 = build_m4()
    h = cover_from_map(o, m4.origami, [s % 12 for s in range(24)])
    pi2t = compose_covers(h, m4.covers["pi2"])
    vs = vertex_structure(o)
    marked = {
        "hatA1": vs.vertex_of[7],
        "hatA2": vs.vertex_of[9],
        "hatA3_1": vs.vertex_of[11],
        "hatA3_2": vs.vertex_of[23],
    }
    return NamedSurface(
        "m4tilde", o, covers={"h": h, "pi2t": pi2t}, marked=marked
    )


def _y_voltages(n: int) -> VoltageData:
    t6 = torus(6)
    cyc_n = tuple((k + 1) % n for k in range(n))  # full cycle on the sheets
    swap = _perm("(1,2)", n)

    def sq(x: int, y: int) -> int:
        return x + 6 * y

    w_b = {
        sq(0, 5): cyc_n,  # top edge of the left column
        sq(1, 5): swap,
        sq(0, 0): swap,
        sq(1, 0): swap,
    }
    w_a = {sq(1, 0): swap}
    return VoltageData(t6, n, w_a, w_b)


def build_y(n: int, *, allow_any: bool = False) -> NamedSurface:
    """n-sheeted voltage cover of the 6x6 torus, ramified over three points.

    The cover ``pi1`` has profile (n) over A = (0,0), (n-1,1) over
    P = (1/6,0), (2,1,...,1) over Q = (0,1/6) and is unramified elsewhere.
    Intended for odd n >= 5; other n >= 2 are allowed for experiments with
    ``allow_any`` and flagged with a warning.
    """
    warning = _family_warning(n, allow_any)
    total, pi1 = voltage_cover(_y_voltages(n))
    return NamedSurface(f"y:{n}", total, covers={"pi1": pi1}, warning=warning)


def _family_warning(n: int, allow_any: bool) -> str | None:
    if n >= 5 and n % 2 == 1:
        return None
    if not allow_any:
        raise ValueError(
            f"family parameter n={n} should be odd and >= 5 "
            "(pass allow_any=True to experiment)"
        )
    msg = f"n={n} is outside the intended range (odd, >= 5)"
    warnings.warn(msg, stacklevel=3)
    return msg


@dataclass(frozen=True)
class CovM4:
    """The glued product surface with its tower of coverings.

    q    : total -> 6x6 torus           (degree 6n)
    q2   : total -> y:n                 (degree 6)
    q1t  : total -> 3x3-refined m4tilde (degree n)
    q1   : total -> 3x3-refined m4      (degree 2n)

    Marked vertices of the refined ``m4`` target: A1, A2, A3.
    """

    surface: NamedSurface
    q: CoveringMap
    q2: CoveringMap
    q1t: CoveringMap
    q1: CoveringMap
    m4_refined_marked: dict[str, int]


def build_cov_m4(n: int, *, allow_any: bool = False) -> CovM4:
    """Glued product of ``y:n`` and the 3x3 subdivision of ``m4tilde``.

    216n squares over the 6x6 torus; connected for every n >= 2.
    """
    y = build_y(n, allow_any=allow_any)
    warning = y.warning
    m4t = build_m4_tilde()
    # Rebase the subdivided torus(2) onto torus(6) so the product with pi1
    # (built over torus(6) directly) glues square by square.
    pi2t6 = rebase_to_grid(refine_cover(m4t.covers["pi2t"], 3))
    prod: FibreProduct = fake_fibre_product(y.covers["pi1"], pi2t6)
    h6 = refine_cover(m4t.covers["h"], 3)
    q1 = compose_covers(prod.q1, h6)
    m4_refined = h6.target
    vs = vertex_structure(m4_refined)
    # Lower-left corners of squares 8, 10, 12 survive subdivision as the
    # lower-left corners of their (0,0) subsquares.
    marked = {
        "A1": vs.vertex_of[7 * 9],
        "A2": vs.vertex_of[9 * 9],
        "A3": vs.vertex_of[11 * 9],
    }
    surf = NamedSurface(
        f"covm4:{n}",
        prod.total,
        covers={"q": prod.q, "q2": prod.q2, "q1t": prod.q1, "q1": q1},
        warning=warning,
    )
    return CovM4(surf, prod.q, prod.q2, prod.q1, q1, marked)


def build_torus(k: int) -> NamedSurface:
    return NamedSurface(f"torus:{k}", torus(k))


def from_spec(spec: str) -> NamedSurface:
    """Resolve a CLI surface name like ``ew``, ``y:7`` or ``torus:3``."""
    head, _, arg = spec.partition(":")
    if head == "ew" and not arg:
        return build_ew()
    if head == "ew128" and not arg:
        return build_ew128()[0]
    if head == "x512" and not arg:
        return build_x512()
    if head == "m4" and not arg:
        return build_m4()
    if head == "m4tilde" and not arg:
        return build_m4_tilde()
    if head in ("y", "covm4", "torus"):
        if not arg:
            raise ValueError(f"{head} needs a parameter, e.g. {head}:5")
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad parameter in {spec!r}") from None
        if head == "y":
            return build_y(n, allow_any=True)
        if head == "covm4":
            return build_cov_m4(n, allow_any=True).surface
        return build_torus(n)
    raise ValueError(f"unknown surface {spec!r}")


ZOO_NAMES = ("ew", "ew128", "x512", "m4", "m4tilde", "y:<n>", "covm4:<n>", "torus:<k>")
