"""Fibre products of coverings glued square by square.

Given coverings ``c1: X1 -> Y`` and ``c2: X2 -> Y``, rewrite both in voltage
form over ``Y`` and glue one sheet pair per pair of sheets: the total space
has squares ``(y, a, b)`` with both voltages acting componentwise.  This is
the connected component picture of the usual fibre product; the construction
fails (NotTransitiveError) when the pairs split into several components, as
happens already for the product of a cover with itself.

Ramification multiplies in gcd/lcm fashion: above a point where ``c1`` has
index ``e`` and ``c2`` index ``f`` there are ``gcd(e, f)`` points of index
``lcm(e, f)``.  ``predicted_profile`` implements that rule; products built
here satisfy it point by point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .covering import CoveringMap, VoltageData, cover_from_map, cover_to_voltage
from .perms import orbits
from .surface import Origami


class NotTransitiveError(ValueError):
    """Sheet pairs split into several components; partition attached."""

    def __init__(self, parts):
        self.orbits = parts
        super().__init__(
            f"fibre product is not connected: {len(parts)} components"
        )


@dataclass(frozen=True)
class FibreProduct:
    total: Origami
    q1: CoveringMap  # total -> c2.source
    q2: CoveringMap  # total -> c1.source
    q: CoveringMap  # total -> common base


def fake_fibre_product(c1: CoveringMap, c2: CoveringMap) -> FibreProduct:
    """Glued product of two coverings of the same base.

    Square ``(y, a, b)`` gets index ``(y*d1 + a)*d2 + b`` where ``a`` indexes
    sheets of ``c1`` and ``b`` sheets of ``c2``.
    """
    if (
        c1.target.sigma_a != c2.target.sigma_a
        or c1.target.sigma_b != c2.target.sigma_b
    ):
        raise ValueError("coverings do not share a base")
    base = c1.target
    v1, fib1 = cover_to_voltage(c1)
    v2, fib2 = cover_to_voltage(c2)
    d1, d2 = v1.d, v2.d
    n = base.n
    total_n = n * d1 * d2
    sa = [0] * total_n
    sb = [0] * total_n
    to_x1 = [0] * total_n
    to_x2 = [0] * total_n
    to_base = [0] * total_n
    for y in range(n):
        wa1, wb1 = v1.voltage_a(y), v1.voltage_b(y)
        wa2, wb2 = v2.voltage_a(y), v2.voltage_b(y)
        ya, yb = base.sigma_a[y], base.sigma_b[y]
        for a in range(d1):
            row = (y * d1 + a) * d2
            rowa = (ya * d1 + wa1[a]) * d2
            rowb = (yb * d1 + wb1[a]) * d2
            for b in range(d2):
                t = row + b
                sa[t] = rowa + wa2[b]
                sb[t] = rowb + wb2[b]
                to_x1[t] = fib1[y][a]
                to_x2[t] = fib2[y][b]
                to_base[t] = y
    parts = orbits([tuple(sa), tuple(sb)], total_n)
    if len(parts) > 1:
        raise NotTransitiveError(parts)
    total = Origami(tuple(sa), tuple(sb))
    q2 = cover_from_map(total, c1.source, to_x1)
    q1 = cover_from_map(total, c2.source, to_x2)
    q = cover_from_map(total, base, to_base)
    return FibreProduct(total, q1, q2, q)


def predicted_profile(p1, p2) -> tuple[int, ...]:
    """gcd/lcm rule for the profile of a fibre product over one point.

    >>> predicted_profile((1, 4), (1, 1, 1, 1, 1, 1))
    (4, 4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1)
    >>> predicted_profile((2, 1), (2, 1))
    (2, 2, 2, 1)
    """
    out = []
    for e in p1:
        for f in p2:
            out.extend([lcm(e, f)] * gcd(e, f))
    return tuple(sorted(out, reverse=True))
