"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere. Matrices are small (tens of rows at most), so the
algorithms are the textbook ones with smallest-absolute-value pivoting.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, UnboundedPolytope


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum(r[k] * b[k][j] for k in range(self.cols))
                        for j in range(other.cols)])
        return IntMatrix.from_rows(out, other.cols)

    def det(self):
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        return determinant(self.to_rows())

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def _as_rows(A):
    if isinstance(A, IntMatrix):
        return A.to_rows(), A.cols
    rows = [list(r) for r in A]
    return rows, (len(rows[0]) if rows else 0)


def determinant(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for r in M:
        r[i], r[j] = r[j], r[i]


def _row_hnf(A):
    """Upper row-style HNF: returns (H, U) with H = U A."""
    H = [list(r) for r in A]
    m = len(H)
    n = len(H[0]) if H else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            _swap_rows(H, r, p)
            _swap_rows(U, r, p)
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U


def hermite_normal_form(A):
    """Row Hermite normal form ``H = U @ A`` with ``U`` unimodular.

    The echelon shape is lower-triangular: zero rows come first, and reading
    downwards each nonzero row ends in a positive pivot strictly to the right
    of the previous row's pivot. Entries of a pivot column lying below the
    pivot are reduced into ``[0, pivot)``. For a square nonsingular ``A`` the
    result is lower-triangular.
    """
    rows, cols = _as_rows(A)
    m = len(rows)
    # mirror, take the usual upper form, mirror back
    flipped = [list(reversed(r)) for r in reversed(rows)]
    H, U = _row_hnf(flipped)
    H = [list(reversed(r)) for r in reversed(H)]
    U = [list(reversed(r)) for r in reversed(U)]
    return IntMatrix.from_rows(H, cols), IntMatrix.from_rows(U, m)


def smith_normal_form(A):
    """Smith normal form ``D = U @ A @ V`` with ``U``, ``V`` unimodular.

    The diagonal of ``D`` is ``d_1 | d_2 | ... | d_r`` with every ``d_i > 0``,
    followed by zeros.
    """
    rows, n = _as_rows(A)
    m = len(rows)
    D = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for M in (D, V):
            for r in M:
                r[i] -= q * r[j]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        _swap_rows(D, t, pi)
        _swap_rows(U, t, pi)
        _swap_cols(D, t, pj)
        _swap_cols(V, t, pj)
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    row_op(i, t, D[i][t] // D[t][t])
            for j in range(t + 1, n):
                if D[t][j]:
                    col_op(j, t, D[t][j] // D[t][t])
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, pi, pj = min(rest)
                if pi != t:
                    _swap_rows(D, t, pi)
                    _swap_rows(U, t, pi)
                else:
                    _swap_cols(D, t, pj)
                    _swap_cols(V, t, pj)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            row_op(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return (IntMatrix.from_rows(D, n), IntMatrix.from_rows(U, m),
            IntMatrix.from_rows(V, n))


def invariant_factors(A):
    D, _, _ = smith_normal_form(A)
    return [D[i, i] for i in range(min(D.rows, D.cols)) if D[i, i]]


def _rref(M):
    """Reduced row echelon form over Q in place; returns pivot columns."""
    m = len(M)
    n = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / Fraction(M[r][c])
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def rank(A):
    """Rank over Q by fraction-free integer elimination."""
    rows, _ = _as_rows(A)
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    r = 0
    for c in range(len(M[0])):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pr = M[r]
        a = pr[c]
        for i in range(r + 1, len(M)):
            b = M[i][c]
            if b:
                row = [a * x - b * y for x, y in zip(M[i], pr)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                M[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(M):
            break
    return r


def kernel_basis(A):
    """Basis of the rational right kernel of ``A``."""
    rows, n = _as_rows(A)
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = _rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -M[i][f]
        basis.append(tuple(v))
    return basis


class LinearSolution(NamedTuple):
    x: tuple
    unique: bool


def solve_rational(A, b) -> Optional[LinearSolution]:
    """Solve ``A x = b`` exactly.

    Returns ``None`` when the system is inconsistent. When the solution space
    is positive-dimensional one particular solution is returned (free
    variables set to zero) and ``unique`` is False.
    """
    rows, n = _as_rows(A)
    b = list(b)
    if len(rows) != len(b):
        raise DimensionMismatch(f"A has {len(rows)} rows but b has length {len(b)}")
    M = [[Fraction(x) for x in r] + [Fraction(bi)] for r, bi in zip(rows, b)]
    pivots = _rref(M)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = M[i][n]
    return LinearSolution(tuple(x), len(pivots) == n)


# --------------------------------------------------------------------------
# exact linear programming


class LPResult(NamedTuple):
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Optional[Fraction]
    x: Optional[tuple]


def _pivot(T, basis, r, c):
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]
    basis[r] = c


def _simplex(T, basis, cost, allowed):
    """Maximise ``cost . y`` over the tableau ``T`` (last column = rhs).

    Bland's rule, so it terminates. Returns False when unbounded.
    """
    while True:
        # reduced costs
        entering = None
        for j in allowed:
            if j in basis:
                continue
            rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(len(T)))
            if rc > 0:
                entering = j
                break
        if entering is None:
            return True
        best = None
        for i in range(len(T)):
            a = T[i][entering]
            if a > 0:
                key = (T[i][-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], entering)


def _standard_max(A, b, cost):
    """Maximise ``cost . y`` subject to ``A y = b``, ``y >= 0``.

    Returns (status, value, y) with status "optimal", "infeasible" or
    "unbounded".
    """
    m = len(A)
    n = len(cost)
    T = []
    for i, (row, bi) in enumerate(zip(A, b)):
        s = -1 if bi < 0 else 1
        T.append([Fraction(s * v) for v in row] + [Fraction(int(k == i)) for k in range(m)]
                 + [Fraction(s * bi)])
    basis = [n + i for i in range(m)]
    _simplex(T, basis, [Fraction(0)] * n + [Fraction(-1)] * m, range(n + m))
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= n):
        return "infeasible", None, None
    i = 0
    while i < len(T):  # drive zero-level artificials out of the basis
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, j)
        i += 1
    full_cost = [Fraction(v) for v in cost] + [Fraction(0)] * m
    if not _simplex(T, basis, full_cost, range(n)):
        return "unbounded", None, None
    y = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        y[bi] = T[i][-1]
    return "optimal", sum((Fraction(c) * v for c, v in zip(cost, y)), Fraction(0)), tuple(y)


def nonneg_solution(A, b):
    """A point y >= 0 with ``A y = b``, or None when there is none."""
    n = len(A[0]) if A else 0
    status, _, y = _standard_max(A, b, [0] * n)
    return y if status == "optimal" else None


def is_feasible(G, h):
    """Whether ``G x <= h`` has a rational solution (x free)."""
    if not G:
        return True
    m = len(G)
    A = [list(g) + [-v for v in g] + [int(k == i) for k in range(m)] for i, g in enumerate(G)]
    return nonneg_solution(A, h) is not None


def linprog_max(c, G, h) -> LPResult:
    """Maximise ``c . x`` subject to ``G x <= h`` with ``x`` free, exactly.

    Solved through the dual ``min h . y`` with ``G^T y = c``, ``y >= 0``,
    which has only ``len(c)`` equality rows; the primal is checked for
    feasibility separately.
    """
    if not is_feasible(G, h):
        return LPResult("infeasible", None, None)
    return _bounded_max(c, G, h)


def _bounded_max(c, G, h):
    """linprog_max for a primal already known to be feasible."""
    if not G:
        if all(v == 0 for v in c):
            return LPResult("optimal", Fraction(0), None)
        return LPResult("unbounded", None, None)
    n = len(c)
    At = [[g[k] for g in G] for k in range(n)]
    status, value, _ = _standard_max(At, list(c), [-v for v in h])
    if status == "infeasible":
        return LPResult("unbounded", None, None)
    return LPResult("optimal", -value, None)


# --------------------------------------------------------------------------
# rational polytopes


@dataclass(frozen=True)
class RationalPolytope:
    """``{m : <m, normal> >= -offset}`` for each (normal, offset) halfspace."""

    dim: int
    halfspaces: tuple

    def __post_init__(self):
        for normal, _ in self.halfspaces:
            if len(normal) != self.dim:
                raise DimensionMismatch(
                    f"halfspace normal {normal} in ambient dimension {self.dim}")

    @classmethod
    def from_halfspaces(cls, dim, halfspaces):
        """Normalize to integer normals; offsets stay exact rationals."""
        out = []
        for u, a in halfspaces:
            u = [Fraction(v) for v in u]
            a = Fraction(a)
            scale = 1
            for v in u:
                scale = scale * v.denominator // gcd(scale, v.denominator)
            a *= scale
            out.append((tuple(int(v * scale) for v in u),
                        a.numerator if a.denominator == 1 else a))
        return cls(dim, tuple(out))

    def contains(self, m):
        return all(sum(x * y for x, y in zip(m, u)) >= -a for u, a in self.halfspaces)

    def _lp_form(self):
        # <m,u> >= -a  <=>  <m,-u> <= a
        return [[-v for v in u] for u, _ in self.halfspaces], [a for _, a in self.halfspaces]

    def bounding_box(self):
        """Integer bounds per coordinate, or None when there is no rational point.

        Raises UnboundedPolytope when some coordinate is unbounded.
        """
        G, h = self._lp_form()
        if not is_feasible(G, h):
            return None
        box = []
        for i in range(self.dim):
            e = [int(j == i) for j in range(self.dim)]
            hi = _bounded_max(e, G, h)
            lo = _bounded_max([-v for v in e], G, h)
            if hi.status == "unbounded" or lo.status == "unbounded":
                raise UnboundedPolytope(f"coordinate {i} is unbounded")
            box.append((ceil(-lo.value), floor(hi.value)))
        return box


def lattice_points(P: RationalPolytope):
    """All integer points of a bounded polytope, in lexicographic order."""
    if P.dim == 0:
        return [()] if all(0 >= -a for _, a in P.halfspaces) else []
    box = P.bounding_box()
    if box is None or any(lo > hi for lo, hi in box):
        return []
    n = P.dim
    hs = P.halfspaces
    # for pruning: the largest value the not-yet-fixed coordinates can add
    tail_max = []
    for u, _ in hs:
        tm = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            lo, hi = box[k]
            tm[k] = tm[k + 1] + max(u[k] * lo, u[k] * hi)
        tail_max.append(tm)
    out = []
    point = [0] * n
    partial = [0] * len(hs)

    def rec(k):
        if k == n:
            out.append(tuple(point))
            return
        lo, hi = box[k]
        for v in range(lo, hi + 1):
            ok = True
            for idx, (u, a) in enumerate(hs):
                s = partial[idx] + u[k] * v
                if s + tail_max[idx][k + 1] < -a:
                    ok = False
                    break
            if not ok:
                continue
            point[k] = v
            for idx, (u, _) in enumerate(hs):
                partial[idx] += u[k] * v
            rec(k + 1)
            for idx, (u, _) in enumerate(hs):
                partial[idx] -= u[k] * v

    rec(0)
    return out


def primitive(v: Sequence[int]):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v), 0
    return tuple(x // g for x in v), g
