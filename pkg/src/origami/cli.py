"""Command-line front end over the library layers.

``inspect`` prints the invariants of an origami (file or bundled name),
``refine`` rewrites one with subdivided squares, ``cover ram`` prints a
ramification profile, ``fibre`` glues two coverings over a common base,
``veech`` enumerates an SL(2,Z) orbit with its stabilizer generators,
``homology`` prints homology ranks or a finite closure report, and
``verify`` runs the bundled claim suites.

Coverings are addressed as ``<surface>/<key>``, e.g. ``x512/p`` or
``ew/pi``; surfaces either name a bundled one (``ew``, ``ew128``,
``x512``, ``m4``, ``m4tilde``, ``y:<n>``, ``covm4:<n>``, ``torus:<k>``)
or give a path to an origami text file.

Exit codes: 0 success and all checks pass, 1 a claim or predicate
failed, 2 usage or input error.  The environment variable ``ORIGAMI_CAP``
overrides the default BFS caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from hashlib import blake2b

from .affine import check_iff_trivial, check_pm_id, monodromy_closure
from .covering import (
    CoveringMap,
    ramification_profile,
    rebase_to_grid,
    refine_cover,
)
from .fibre import fake_fibre_product
from .homology import homology_basis, pushforward_matrix, split_subspaces
from .intlinalg import det_exact, is_skew
from .sl2 import in_gamma, word_to_matrix
from .surface import (
    Origami,
    genus,
    load_origami,
    origami_to_text,
    refine,
    save_origami,
    stratum,
    vertex_structure,
)
from .veech import CapExceededError, orbit_stabilizer
from .verify import (
    verify_homology_suite,
    verify_orni_suite,
    verify_x512_suite,
)
from .zoo import NamedSurface, from_spec


class InputError(ValueError):
    """Bad surface name, file, or covering address."""


def _load_surface(spec: str) -> NamedSurface:
    """A bundled surface by name, or a file wrapped as an anonymous one."""
    if os.path.exists(spec):
        try:
            o = load_origami(spec)
        except ValueError as exc:
            raise InputError(f"{spec}: {exc}") from exc
        return NamedSurface(spec, o)
    try:
        return from_spec(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_cover(spec: str) -> CoveringMap:
    name, sep, key = spec.rpartition("/")
    if not sep:
        raise InputError(
            f"covering address {spec!r} is not of the form <surface>/<key>"
        )
    surface = _load_surface(name)
    if key not in surface.covers:
        have = ", ".join(sorted(surface.covers)) or "none"
        raise InputError(
            f"surface {surface.name!r} has no covering {key!r} (have: {have})"
        )
    return surface.covers[key]


def _cover_entry(c: CoveringMap) -> dict:
    return {
        "degree": c.degree,
        "target_squares": c.target.n,
        "square_map": list(c.square_map),
    }


def _manifest(surface: NamedSurface) -> dict:
    out = {
        "name": surface.name,
        "origami": origami_to_text(surface.origami),
        "covers": {k: _cover_entry(c) for k, c in sorted(surface.covers.items())},
    }
    if surface.marked:
        out["marked"] = dict(sorted(surface.marked.items()))
    return out


def cmd_inspect(args) -> int:
    surface = _load_surface(args.surface)
    o = surface.origami
    vs = vertex_structure(o)
    zeros = [len(c) - 1 for c in vs.cycles if len(c) > 1]
    if args.json:
        out = _manifest(surface)
        out.update(
            {
                "squares": o.n,
                "genus": genus(o),
                "stratum": list(stratum(o)),
                "vertices": vs.count,
                "zeros": len(zeros),
            }
        )
        print(json.dumps(out, indent=2))
    else:
        print(f"name:     {surface.name}")
        print(f"squares:  {o.n}")
        print(f"genus:    {genus(o)}")
        print(f"stratum:  {stratum(o)}")
        print(f"vertices: {vs.count} ({len(zeros)} zeros)")
        for key, c in sorted(surface.covers.items()):
            print(f"cover:    {key} (degree {c.degree} onto {c.target.n} squares)")
    return 0


def cmd_refine(args) -> int:
    surface = _load_surface(args.surface)
    if args.k < 1:
        raise InputError("--k must be a positive integer")
    save_origami(refine(surface.origami, args.k).origami, args.output)
    return 0


def cmd_cover(args) -> int:
    c = _load_cover(args.cover)
    if args.grid:
        c = rebase_to_grid(refine_cover(c, args.grid))
    print(ramification_profile(c).to_json())
    return 0


def cmd_fibre(args) -> int:
    c1 = _load_cover(args.cover_a)
    c2 = _load_cover(args.cover_b)
    prod = fake_fibre_product(c1, c2)
    total = NamedSurface(
        f"({args.cover_a})*({args.cover_b})",
        prod.total,
        covers={"q1": prod.q1, "q2": prod.q2, "q": prod.q},
    )
    print(json.dumps(_manifest(total), indent=2))
    return 0


def cmd_veech(args) -> int:
    surface = _load_surface(args.surface)
    orbit = orbit_stabilizer(surface.origami, cap=args.cap)
    gamma_levels = {}
    for level in args.gamma or []:
        gamma_levels[level] = all(
            in_gamma(word_to_matrix(w), level) for w in orbit.stabilizer_words
        )
    if args.dot:
        _write_dot(orbit, args.dot)
    out = {
        "index": orbit.index,
        "generators": list(orbit.stabilizer_words),
        "gamma_levels": {str(k): v for k, v in gamma_levels.items()},
    }
    print(json.dumps(out, indent=2))
    return 0 if all(gamma_levels.values()) else 1


def _write_dot(orbit, path: str) -> None:
    def node(i: int) -> str:
        a, b = orbit.forms[i]
        h = blake2b(repr((a, b)).encode(), digest_size=8).hexdigest()
        return f'"{h}"'

    lines = ["digraph veech {"]
    for i in range(orbit.index):
        lines.append(f"  {node(i)} [label=\"{i}\"];")
    for i, letter, j in orbit.edges:
        lines.append(f"  {node(i)} -> {node(j)} [label=\"{letter}\"];")
    lines.append("}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _torus_kernel(surface: NamedSurface, hd):
    """Rows spanning the kernel of the pushforward to a grid-torus cover."""
    for key in sorted(surface.covers):
        c = surface.covers[key]
        if genus(c.target) == 1:
            push = pushforward_matrix(c, hd, homology_basis(c.target))
            return split_subspaces(hd, push).h0
    raise InputError(
        f"surface {surface.name!r} has no covering of a torus; "
        "a closure needs one to split off the kernel subspace"
    )


def cmd_homology(args) -> int:
    surface = _load_surface(args.surface)
    o = surface.origami
    hd = homology_basis(o)
    if args.closure is None:
        out = {
            "squares": o.n,
            "genus": genus(o),
            "rank": hd.rank,
            "omega_skew": is_skew(hd.omega),
            "omega_unimodular": abs(det_exact(tuple(map(tuple, hd.omega)))) == 1,
        }
        print(json.dumps(out, indent=2))
        return 0
    marked = _resolve_marked(surface, args.marked)
    rows = _torus_kernel(surface, hd)
    closure = monodromy_closure(o, args.closure, marked, restrict_to=rows, hd=hd)
    check = {
        "pm_id": check_pm_id,
        "iff_trivial": check_iff_trivial,
    }[args.predicate](closure)
    print(json.dumps(check.to_json(), indent=2))
    return 0 if check.holds else 1


def _resolve_marked(surface: NamedSurface, tokens):
    if not tokens:
        return {str(v): v for v in surface.zeros}
    out = {}
    for tok in tokens:
        if tok in surface.marked:
            out[tok] = surface.marked[tok]
        else:
            try:
                out[tok] = int(tok)
            except ValueError:
                have = ", ".join(sorted(surface.marked)) or "none"
                raise InputError(
                    f"unknown marked point {tok!r} (have: {have})"
                ) from None
    return out


def cmd_verify(args) -> int:
    if args.suite == "x512":
        reports = verify_x512_suite()
    elif args.suite == "orni":
        reports = verify_orni_suite(args.n)
    else:
        reports = verify_homology_suite(deep=args.deep)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="origami",
        description="square-tiled surfaces: invariants, coverings, "
        "Veech orbits, homology actions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="stratum, genus and vertex data")
    p.add_argument("surface", help="origami file or bundled surface name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("refine", help="subdivide every square into k x k")
    p.add_argument("surface", help="origami file or bundled surface name")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("cover", help="covering computations")
    cover_sub = p.add_subparsers(dest="cover_command", required=True)
    ram = cover_sub.add_parser("ram", help="ramification profile as JSON")
    ram.add_argument("cover", help="covering address <surface>/<key>")
    ram.add_argument(
        "--grid", type=int, help="refine and rebase the target to a k-grid"
    )
    ram.set_defaults(func=cmd_cover)

    p = sub.add_parser("fibre", help="glued product of two coverings")
    p.add_argument("cover_a", help="covering address <surface>/<key>")
    p.add_argument("cover_b", help="covering address <surface>/<key>")
    p.set_defaults(func=cmd_fibre)

    p = sub.add_parser("veech", help="SL(2,Z) orbit and stabilizer words")
    p.add_argument("surface", help="origami file or bundled surface name")
    p.add_argument("--cap", type=int, help="orbit size cap")
    p.add_argument(
        "--gamma",
        type=int,
        action="append",
        help="check stabilizer containment in the congruence kernel mod N",
    )
    p.add_argument("--dot", help="write the orbit graph in DOT format")
    p.set_defaults(func=cmd_veech)

    p = sub.add_parser("homology", help="ranks or a finite closure report")
    p.add_argument("surface", help="origami file or bundled surface name")
    p.add_argument("--closure", type=int, help="closure level N")
    p.add_argument(
        "--marked",
        nargs="*",
        help="marked points (names or vertex ids; default: the zeros)",
    )
    p.add_argument(
        "--predicate",
        choices=("pm_id", "iff_trivial"),
        default="pm_id",
        help="predicate checked over the closure states",
    )
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="run a claim suite")
    verify_sub = p.add_subparsers(dest="suite", required=True)
    vx = verify_sub.add_parser("x512", help="the 512-square surface suite")
    vx.add_argument("--json", action="store_true")
    vo = verify_sub.add_parser("orni", help="the glued-product tower suite")
    vo.add_argument("--n", type=int, default=5)
    vo.add_argument("--json", action="store_true")
    vh = verify_sub.add_parser("homology", help="closure and witness suite")
    vh.add_argument("--deep", action="store_true")
    vh.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, CapExceededError) as exc:
        # input-driven failures: bad files, addresses, disconnected glueings,
        # exceeded caps; internal invariant violations still raise
        print(f"origami: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
