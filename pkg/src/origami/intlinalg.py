"""Small exact linear algebra helpers over the integers and rationals.

Everything works on lists of lists of ints (or Fractions, where stated) and
stays exact; there is no floating point anywhere.  Kernels are returned as
bases of the full integer kernel lattice (row operations are unimodular), so
saturation comes for free.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = list[int]
Mat = list[list[int]]


def identity_matrix(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> Mat:
    return [[0] * cols for _ in range(rows)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Mat:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Vec:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Mat:
    return [list(col) for col in zip(*a)] if a else []


def mat_eq(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def mat_neg(a) -> Mat:
    return [[-x for x in row] for row in a]


def is_skew(a) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def bilinear(omega: Sequence[Sequence[int]], u: Sequence[int], v: Sequence[int]) -> int:
    """u^T Omega v."""
    total = 0
    for i, ui in enumerate(u):
        if ui:
            row = omega[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if row[j])
    return total


def det_exact(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_exact(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan over the rationals; raises on singular input."""
    n = len(a)
    m = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def inverse_unimodular(a: Sequence[Sequence[int]]) -> Mat:
    """Exact integer inverse; requires determinant +-1."""
    inv = inverse_exact(a)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return out


def _int_row_echelon(m: Mat) -> tuple[Mat, int]:
    """In-place integer row echelon via gcd steps; returns (matrix, rank).

    Row operations are unimodular, so the row lattice is preserved.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        while True:
            nz = [i for i in range(r, rows) if m[i][c]]
            if not nz:
                break
            if len(nz) == 1:
                i = nz[0]
                m[r], m[i] = m[i], m[r]
                break
            nz.sort(key=lambda i: abs(m[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][c] // m[i0][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[i0])]
        if m[r][c]:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            r += 1
    return m, r


def rank(a: Sequence[Sequence[int]]) -> int:
    if not a:
        return 0
    return _int_row_echelon([list(row) for row in a])[1]


def kernel_lattice(a: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of the full lattice {x in Z^n : A x = 0}.

    Row-reduces the transpose augmented with the identity; rows whose left
    part vanishes carry kernel vectors, and because only unimodular row
    operations are used the result generates the whole kernel lattice.
    """
    if not a:
        return []
    ncols = len(a[0])
    at = transpose(a)
    aug = [at[i] + [1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    nleft = len(a)
    m, _ = _int_row_echelon(aug)
    out = []
    for row in m:
        if any(row[:nleft]):
            continue
        v = row[nleft:]
        if any(v):
            out.append(list(v))
    return out


class LatticeSolver:
    """Express vectors as rational combinations of a fixed independent family."""

    def __init__(self, basis: Sequence[Sequence[int]]):
        self.basis = [list(v) for v in basis]
        self.k = len(self.basis)
        self.dim = len(self.basis[0]) if self.basis else 0
        # Row-reduce [B^T | I] over Q once; solving for a new right hand
        # side is then a matrix-vector product with the recorded I-part.
        m = [
            [Fraction(self.basis[j][i]) for j in range(self.k)]
            + [Fraction(int(i == r)) for r in range(self.dim)]
            for i in range(self.dim)
        ]
        self._pivot_row_of_col: list[int] = []
        used: set[int] = set()
        for col in range(self.k):
            piv = next(
                (r for r in range(self.dim) if r not in used and m[r][col]), None
            )
            if piv is None:
                raise ValueError("family is not linearly independent")
            used.add(piv)
            self._pivot_row_of_col.append(piv)
            inv = Fraction(1) / m[piv][col]
            m[piv] = [x * inv for x in m[piv]]
            for r in range(self.dim):
                if r != piv and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[piv])]
        self._reduced = m
        self._free_rows = [r for r in range(self.dim) if r not in used]

    def coords(self, v: Sequence[int]) -> list[Fraction]:
        """Coefficients c with sum(c[j] * basis[j]) = v; raises if outside."""
        transformed = [
            sum(row[self.k + i] * v[i] for i in range(self.dim) if v[i])
            for row in self._reduced
        ]
        for r in self._free_rows:
            if transformed[r]:
                raise ValueError("vector lies outside the span")
        return [transformed[self._pivot_row_of_col[c]] for c in range(self.k)]

    def int_coords(self, v: Sequence[int]) -> Vec:
        out = []
        for x in self.coords(v):
            if x.denominator != 1:
                raise ValueError("vector is not an integer combination")
            out.append(int(x))
        return out

    def contains(self, v: Sequence[int]) -> bool:
        try:
            self.coords(v)
        except ValueError:
            return False
        return True


def restrict_action(matrix: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> Mat:
    """Matrix of an endomorphism on an invariant sublattice basis.

    ``matrix`` acts on column vectors of the ambient space; ``basis`` lists
    the sublattice basis vectors.  Raises if an image falls outside the
    lattice spanned by ``basis``.
    """
    solver = LatticeSolver(basis)
    cols = [solver.int_coords(mat_vec(matrix, v)) for v in basis]
    k = len(basis)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def lattice_intersection(b1: Sequence[Sequence[int]], b2: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of the intersection of two saturated sublattices (row bases)."""
    if not b1 or not b2:
        return []
    dim = len(b1[0])
    stacked = [
        [b1[i][d] for i in range(len(b1))] + [-b2[j][d] for j in range(len(b2))]
        for d in range(dim)
    ]
    out = []
    for w in kernel_lattice(stacked):
        u = w[: len(b1)]
        v = [0] * dim
        for c, bv in zip(u, b1):
            if c:
                for i, x in enumerate(bv):
                    v[i] += c * x
        if any(v):
            out.append(v)
    return out


def omega_orthogonal(omega: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of {x : b^T Omega x = 0 for all b in basis}."""
    if not basis:
        return [list(row) for row in identity_matrix(len(omega))]
    constraints = [mat_vec(transpose(omega), b) for b in basis]
    return kernel_lattice(constraints)


def gram_matrix(omega: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> Mat:
    """Restriction of a bilinear form to a subspace basis."""
    return [[bilinear(omega, u, v) for v in basis] for u in basis]


def is_symplectic(m: Sequence[Sequence[int]], omega: Sequence[Sequence[int]]) -> bool:
    """m^T Omega m == Omega."""
    return mat_eq(mat_mul(transpose(m), mat_mul(omega, m)), omega)


def standard_symplectic(g: int) -> Mat:
    """Block diagonal with g blocks [[0, 1], [-1, 0]]."""
    j = zero_matrix(2 * g, 2 * g)
    for i in range(g):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


def symplectic_basis(omega: Sequence[Sequence[int]]) -> Mat:
    """Change of basis G with G^T Omega G standard; Omega must be unimodular skew.

    Symplectic Gram-Schmidt over Z: pick a vector, drive some partner's
    pairing to exactly 1 with gcd steps (possible by unimodularity), then
    clear the pairings of everything else against the new pair.  Returns G
    whose columns are the new basis vectors.
    """
    n = len(omega)
    if n % 2:
        raise ValueError("odd rank cannot be symplectic")
    if not is_skew(omega):
        raise ValueError("form is not skew")
    remaining = identity_matrix(n)
    pair_rows: list[Vec] = []
    while remaining:
        e = remaining.pop(0)
        while True:
            vals = sorted(
                (abs(bilinear(omega, e, f)), idx)
                for idx, f in enumerate(remaining)
                if bilinear(omega, e, f)
            )
            if not vals:
                raise ValueError("form is degenerate on the lattice")
            a0, i0 = vals[0]
            if a0 == 1:
                f = remaining.pop(i0)
                if bilinear(omega, e, f) == -1:
                    f = [-x for x in f]
                break
            base = bilinear(omega, e, remaining[i0])
            progressed = False
            for _, idx in vals[1:]:
                q = bilinear(omega, e, remaining[idx]) // base
                if q:
                    remaining[idx] = [
                        x - q * y for x, y in zip(remaining[idx], remaining[i0])
                    ]
                    progressed = True
            if not progressed:
                raise ValueError("form is not unimodular on the lattice")
        cleaned = []
        for w in remaining:
            cf = bilinear(omega, w, f)
            ce = bilinear(omega, w, e)
            cleaned.append([x - cf * a + ce * b for x, a, b in zip(w, e, f)])
        remaining = cleaned
        pair_rows.extend([e, f])
    g = transpose(pair_rows)
    check = mat_mul(pair_rows, mat_mul([list(r) for r in omega], g))
    if not mat_eq(check, standard_symplectic(n // 2)):
        raise RuntimeError("symplectic reduction failed")
    return g
