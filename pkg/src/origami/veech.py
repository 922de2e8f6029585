"""SL(2, Z) action on origamis and Veech group computations.

The shear T = [[1,1],[0,1]] keeps the horizontal gluing and recuts the
vertical one through the new slanted sides: the square north of ``s``
becomes ``sigma_b(sigma_a^-1(s))``.  The rotation S = [[0,-1],[1,0]] turns
east into north: the new pair is ``(sigma_b^-1, sigma_a)``.  Both fix the
unit torus, satisfy S^4 = (ST)^6 = 1 on equivalence classes, and match the
matrix conventions of :mod:`origami.sl2` as a left action (rightmost letter
of a word acts first).

The orbit of an origami under SL(2, Z) is finite; BFS over canonical forms
yields the orbit, a coset graph with edges labeled T and S, and Schreier
generators of the stabilizer (the Veech group of the surface, for reduced
gluing data).  Generators congruent to the identity mod N certify
containment in the principal congruence group of level N.
"""

from __future__ import annotations

import json
import os
from array import array
from collections import deque
from dataclasses import dataclass
from hashlib import blake2b
from typing import Iterator

from .perms import Perm, compose, inverse
from .sl2 import in_gamma, invert_word, reduce_word, word_to_matrix
from .surface import (
    CanonicalForm,
    Origami,
    canonical_pair_inv,
    canonicalize,
    is_equivalent,
)

DEFAULT_CAP = 100_000


def orbit_cap(default: int = DEFAULT_CAP) -> int:
    """BFS cap, overridable through the ORIGAMI_CAP environment variable."""
    raw = os.environ.get("ORIGAMI_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"ORIGAMI_CAP is not an integer: {raw!r}") from None
    return default


class CapExceededError(RuntimeError):
    def __init__(self, what: str, cap: int):
        self.cap = cap
        super().__init__(f"{what} exceeded the cap of {cap} states")


def apply_generator(o: Origami, letter: str) -> Origami:
    """Act by one generator letter (T, S, or inverse t, s)."""
    sa, sb = o.sigma_a, o.sigma_b
    if letter == "T":
        return Origami(sa, compose(inverse(sa), sb))
    if letter == "t":
        return Origami(sa, compose(sa, sb))
    if letter == "S":
        return Origami(inverse(sb), sa)
    if letter == "s":
        return Origami(sb, inverse(sa))
    raise ValueError(f"bad generator letter {letter!r}")


def apply_word(o: Origami, word: str) -> Origami:
    """Left action: the rightmost letter is applied first."""
    for ch in reversed(word):
        o = apply_generator(o, ch)
    return o


def minus_identity_in_veech(o: Origami) -> bool:
    """-I = S^2 sends (sigma_a, sigma_b) to the inverse pair."""
    return is_equivalent(apply_word(o, "SS"), o)


@dataclass(frozen=True)
class OrbitResult:
    base: Origami
    forms: tuple[tuple[Perm, Perm], ...]  # canonical pairs, BFS order
    entry_words: tuple[str, ...]  # forms[i] ~ entry_words[i] . base
    edges: tuple[tuple[int, str, int], ...]  # (from, letter, to)
    stabilizer_words: tuple[str, ...]

    @property
    def index(self) -> int:
        return len(self.forms)

    def gamma_level(self, n: int) -> bool:
        return all(in_gamma(word_to_matrix(w), n) for w in self.stabilizer_words)

    def to_json(self, gamma_levels=(2, 3, 4, 6)) -> str:
        return json.dumps(
            {
                "index": self.index,
                "generators": list(self.stabilizer_words),
                "gamma_levels": {
                    str(n): self.gamma_level(n) for n in gamma_levels
                },
            },
            indent=2,
        )

    def to_dot(self) -> str:
        lines = ["digraph orbit {"]
        for i in range(self.index):
            lines.append(f'  n{i} [label="{i}"];')
        for u, letter, w in self.edges:
            lines.append(f'  n{u} -> n{w} [label="{letter}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


ScanEvent = tuple  # ("state", j, pair) or ("edge", i, letter, j, is_tree)


def orbit_scan(o: Origami, cap: int | None = None) -> Iterator[ScanEvent]:
    """Stream the orbit BFS as events, keeping only the frontier in memory.

    Yields ``("state", j, pair)`` when class ``j`` is first reached (pair is
    its canonical form; consumers that do not retain it cost nothing) and
    ``("edge", i, letter, j, is_tree)`` for every generator application.
    States are deduplicated by a 16-byte digest of the canonical form; the
    full forms of visited states are dropped once expanded, so memory stays
    proportional to the frontier, not the orbit.
    """
    if cap is None:
        cap = orbit_cap()
    code = "H" if o.n < 1 << 16 else "I"

    def pack(pair: tuple[Perm, Perm]) -> bytes:
        return array(code, pair[0] + pair[1]).tobytes()

    base = canonicalize(o).pair
    packed = pack(base)
    seen: dict[bytes, int] = {blake2b(packed, digest_size=16).digest(): 0}
    queue: deque[tuple[int, bytes]] = deque([(0, packed)])
    yield ("state", 0, base)
    while queue:
        i, buf = queue.popleft()
        half = len(buf) // 2
        a = tuple(array(code, buf[:half]))
        b = tuple(array(code, buf[half:]))
        # the letter images of canonical (a, b) reuse these two inverses
        ai, bi = inverse(a), inverse(b)
        n = len(a)
        tb = tuple(b[ai[s]] for s in range(n))
        tbi = tuple(a[bi[s]] for s in range(n))
        for letter, pair_inv in (("T", (a, tb, ai, tbi)), ("S", (bi, a, b, ai))):
            key, _ = canonical_pair_inv(*pair_inv)
            packed = pack(key)
            dg = blake2b(packed, digest_size=16).digest()
            j = seen.get(dg)
            if j is None:
                j = len(seen)
                if j >= cap:
                    raise CapExceededError("orbit enumeration", cap)
                seen[dg] = j
                queue.append((j, packed))
                yield ("state", j, key)
                yield ("edge", i, letter, j, True)
            else:
                yield ("edge", i, letter, j, False)


def orbit_stabilizer(o: Origami, cap: int | None = None) -> OrbitResult:
    """Orbit BFS with Schreier generators for the stabilizer.

    Applying a generator to an orbit element and flowing back along the BFS
    tree gives one stabilizer word per non-tree edge; together they generate
    the full stabilizer of the equivalence class of ``o``.  Retains every
    canonical form and word, so it suits small orbits; use
    :func:`orbit_scan` directly for large ones.
    """
    base: Origami | None = None
    forms: list[tuple[Perm, Perm]] = []
    words: list[str] = []
    edges: list[tuple[int, str, int]] = []
    stab: list[str] = []
    seen_stab: set[str] = set()
    for event in orbit_scan(o, cap):
        if event[0] == "state":
            _, j, pair = event
            forms.append(pair)
            if base is None:
                base = Origami(*pair)
                words.append("")
        else:
            _, i, letter, j, is_tree = event
            edges.append((i, letter, j))
            if is_tree:
                words.append(reduce_word(letter + words[i]))
            else:
                w = reduce_word(invert_word(words[j]) + letter + words[i])
                if w and w not in seen_stab:
                    seen_stab.add(w)
                    stab.append(w)
    return OrbitResult(
        base,
        tuple(forms),
        tuple(words),
        tuple(edges),
        tuple(stab),
    )


def stabilizer_contained_in_gamma(orbit: OrbitResult, n: int) -> bool:
    return orbit.gamma_level(n)
