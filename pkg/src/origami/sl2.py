"""Words and matrices in SL(2, Z).

Words are strings over ``T``, ``S``, ``t``, ``s`` where lowercase letters
are inverses.  ``word_to_matrix`` reads left to right as a product of the
generator matrices

    T = [[1, 1], [0, 1]]       S = [[0, -1], [1, 0]]

so that a word acts on surfaces as a left action: the rightmost letter is
applied first.  ``S*S`` is ``-I``; principal congruence subgroups are tested
by reducing entries mod N.

Matrices are 2x2 nested tuples ((a, b), (c, d)).
"""

from __future__ import annotations

from fractions import Fraction

Mat2 = tuple[tuple[int, int], tuple[int, int]]

IDENT: Mat2 = ((1, 0), (0, 1))
T_MAT: Mat2 = ((1, 1), (0, 1))
S_MAT: Mat2 = ((0, -1), (1, 0))

LETTER_MATRIX: dict[str, Mat2] = {
    "T": T_MAT,
    "t": ((1, -1), (0, 1)),
    "S": S_MAT,
    "s": ((0, 1), (-1, 0)),
}

_INVERSE_LETTER = {"T": "t", "t": "T", "S": "s", "s": "S"}


def mat_mul(m1: Mat2, m2: Mat2) -> Mat2:
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def det(m: Mat2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def neg(m: Mat2) -> Mat2:
    return ((-m[0][0], -m[0][1]), (-m[1][0], -m[1][1]))


def reduce_word(word: str) -> str:
    """Freely reduce: cancel adjacent inverse letters.

    >>> reduce_word("TtS")
    'S'
    >>> reduce_word("STts")
    ''
    """
    out: list[str] = []
    for ch in word:
        if ch not in LETTER_MATRIX:
            raise ValueError(f"bad letter {ch!r} in word")
        if out and out[-1] == _INVERSE_LETTER[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert_word(word: str) -> str:
    """>>> invert_word("TS")
    'st'
    """
    return "".join(_INVERSE_LETTER[ch] for ch in reversed(word))


def word_to_matrix(word: str) -> Mat2:
    """Left-to-right product of generator matrices.

    >>> word_to_matrix("ST")
    ((0, -1), (1, 1))
    >>> word_to_matrix("SSSS")
    ((1, 0), (0, 1))
    """
    m = IDENT
    for ch in word:
        try:
            m = mat_mul(m, LETTER_MATRIX[ch])
        except KeyError:
            raise ValueError(f"bad letter {ch!r} in word") from None
    return m


def pretty_word(word: str) -> str:
    """Human form with explicit inverses: ``Tt`` -> ``T T^-1``."""
    if not word:
        return "1"
    return " ".join(
        ch if ch.isupper() else _INVERSE_LETTER[ch] + "^-1" for ch in word
    )


def reduce_mod(m: Mat2, n: int) -> Mat2:
    return ((m[0][0] % n, m[0][1] % n), (m[1][0] % n, m[1][1] % n))


def in_gamma(m: Mat2, n: int) -> bool:
    """Entrywise congruence with the identity mod n."""
    return reduce_mod(m, n) == reduce_mod(IDENT, n)


def sl2_order(n: int) -> int:
    """|SL(2, Z/n)| by the multiplicative formula.

    >>> sl2_order(4)
    48
    >>> sl2_order(6)
    144
    """
    out = n ** 3
    seen = set()
    m = n
    p = 2
    while m > 1:
        if m % p == 0:
            if p not in seen:
                seen.add(p)
                out = out * (p * p - 1) // (p * p)
            while m % p == 0:
                m //= p
        p += 1
    return out


def sl2_group_mod(n: int) -> frozenset[Mat2]:
    """All of SL(2, Z/n), generated by the reductions of T and S."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    gens = [reduce_mod(T_MAT, n), reduce_mod(S_MAT, n)]
    start = reduce_mod(IDENT, n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                mg = reduce_mod(mat_mul(m, g), n)
                if mg not in seen:
                    seen.add(mg)
                    nxt.append(mg)
        frontier = nxt
    assert len(seen) == sl2_order(n)
    return frozenset(seen)


def division_point(x: Fraction, y: Fraction, n: int) -> tuple[int, int]:
    """An N-division point of the torus as an integer pair mod N."""
    a = Fraction(x) * n
    b = Fraction(y) * n
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"({x}, {y}) is not an {n}-division point")
    return (int(a) % n, int(b) % n)


def division_stabilizer_is_gamma(points, n: int) -> bool:
    """True iff the joint stabilizer of the points in SL(2,Z) is exactly Γ(n).

    The stabilizer always contains Γ(n), since a matrix congruent to the
    identity mod n fixes every n-division point; equality holds iff only the
    identity of SL(2, Z/n) fixes all the given points, which is decided by
    full enumeration of the finite group.  ``points`` are pairs of Fractions
    (torus coordinates mod 1 with denominators dividing n).
    """
    pts = [division_point(x, y, n) for x, y in points]
    ident = reduce_mod(IDENT, n)
    for m in sl2_group_mod(n):
        if m == ident:
            continue
        (a, b), (c, d) = m
        if all((a * x + b * y) % n == x and (c * x + d * y) % n == y for x, y in pts):
            return False
    return True
