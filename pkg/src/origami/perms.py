"""Exact permutation arithmetic on ``{0, ..., n-1}``.

Permutations are stored in word form as tuples: ``p[i]`` is the image of
``i``.  All functions treat permutations as immutable values and return new
tuples.  Composition reads left to right throughout the package:
``compose(p, q)`` is "apply ``p``, then ``q``".

Cycle notation in text I/O is 1-based, matching the way square gluings are
usually written down; internal indices are 0-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation on n points.

    >>> identity(4)
    (0, 1, 2, 3)
    """
    return tuple(range(n))


def is_permutation(p: Sequence[int]) -> bool:
    """True if ``p`` is a bijection of ``{0, ..., len(p)-1}``.

    >>> is_permutation((1, 2, 0))
    True
    >>> is_permutation((1, 1, 0))
    False
    """
    n = len(p)
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def check_permutation(p: Sequence[int], n: int | None = None) -> Perm:
    """Return ``p`` as a tuple, raising ValueError if it is not a permutation
    (or has the wrong degree when ``n`` is given)."""
    q = tuple(p)
    if n is not None and len(q) != n:
        raise ValueError(f"expected a permutation of {n} points, got {len(q)}")
    if not is_permutation(q):
        raise ValueError(f"not a permutation: {q!r}")
    return q


def inverse(p: Perm) -> Perm:
    """>>> inverse((1, 2, 0))
    (2, 0, 1)
    """
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p``, then ``q``.

    >>> compose((1, 0, 2), (0, 2, 1))
    (2, 0, 1)
    """
    if len(p) != len(q):
        raise ValueError("degree mismatch in compose")
    return tuple(q[x] for x in p)


def compose_all(perms: Iterable[Perm], n: int) -> Perm:
    """Left-to-right product of a sequence of permutations."""
    acc = identity(n)
    for p in perms:
        acc = compose(acc, p)
    return acc


def commutator(p: Perm, q: Perm) -> Perm:
    """The product p^-1 q^-1 p q, applied left to right."""
    return compose(compose(compose(inverse(p), inverse(q)), p), q)


def relabel(p: Perm, r: Perm) -> Perm:
    """Rename points by ``r``: the result sends ``r(i)`` to ``r(p(i))``.

    >>> relabel((1, 0, 2), (2, 1, 0))
    (2, 1, 0)
    """
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[r[i]] = r[x]
    return tuple(out)


def cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of ``p`` including fixed points.

    Each cycle starts at its smallest element; cycles are ordered by that
    element.

    >>> cycles((1, 0, 2))
    ((0, 1), (2,))
    """
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Multiset of cycle lengths, sorted in decreasing order.

    >>> cycle_type((1, 0, 3, 2, 4))
    (2, 2, 1)
    """
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def order_of(p: Perm) -> int:
    from math import lcm

    return lcm(*(len(c) for c in cycles(p))) if p else 1


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-based cycle notation into a permutation of ``n`` points.

    The empty string is the identity.  Entries inside a cycle are separated
    by commas or whitespace; whitespace is otherwise ignored.

    >>> parse_cycles("(1,6,3,8)(2,5,4,7)", 8)
    (5, 4, 7, 6, 3, 2, 1, 0)
    >>> parse_cycles("", 5)
    (0, 1, 2, 3, 4)
    >>> parse_cycles("(1 3)(2 4)", 4)
    (2, 3, 0, 1)
    """
    out = list(range(n))
    hit = [False] * n
    i = 0
    text_len = len(text)
    while i < text_len:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ValueError(f"unexpected character {ch!r} at position {i}")
        j = text.find(")", i + 1)
        if j < 0:
            raise ValueError("unbalanced '(' in cycle notation")
        body = text[i + 1 : j].replace(",", " ").split()
        if not body:
            raise ValueError("empty cycle '()'")
        entries = []
        for tok in body:
            try:
                k = int(tok)
            except ValueError:
                raise ValueError(f"not an integer in cycle: {tok!r}") from None
            if not 1 <= k <= n:
                raise ValueError(f"index {k} out of range 1..{n}")
            if hit[k - 1]:
                raise ValueError(f"index {k} appears twice")
            hit[k - 1] = True
            entries.append(k - 1)
        for a, b in zip(entries, entries[1:] + entries[:1]):
            out[a] = b
        i = j + 1
    return tuple(out)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted; identity is ''.

    >>> format_cycles((5, 4, 7, 6, 3, 2, 1, 0))
    '(1,6,3,8)(2,5,4,7)'
    >>> format_cycles((0, 1))
    ''
    """
    parts = []
    for c in cycles(p):
        if len(c) > 1:
            parts.append("(" + ",".join(str(x + 1) for x in c) + ")")
    return "".join(parts)


def orbits(gens: Sequence[Perm], n: int) -> tuple[tuple[int, ...], ...]:
    """Orbits of ``{0..n-1}`` under the group generated by ``gens``.

    Returned as sorted tuples, ordered by smallest element.

    >>> orbits([(1, 0, 2, 3)], 4)
    ((0, 1), (2,), (3,))
    """
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_transitive(gens: Sequence[Perm], n: int) -> bool:
    return len(orbits(gens, n)) <= 1


def random_permutation(rng, n: int) -> Perm:
    """Uniform random permutation from a ``random.Random`` instance."""
    out = list(range(n))
    rng.shuffle(out)
    return tuple(out)
