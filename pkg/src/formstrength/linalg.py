"""Exact dense linear algebra over the coefficient domains.

Matrices are lists of row lists holding domain elements.  Everything here is
plain Gaussian elimination over a field: rank, inverse, kernel, and the
symmetric congruence diagonalization used for quadratic forms.
"""

from __future__ import annotations


def mat_copy(m):
    return [list(row) for row in m]


def identity(n, dom):
    return [[dom.one if i == j else dom.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b, dom):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[dom.zero] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if not c:
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                if bk[j]:
                    oi[j] = dom.add(oi[j], dom.mul(c, bk[j]))
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_rank(m, dom):
    """Rank by exact row elimination over a field."""
    a = mat_copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, rows):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = dom.inv(a[row][col])
        a[row] = [dom.mul(v, inv) for v in a[row]]
        for r in range(rows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [dom.sub(v, dom.mul(f, w)) for v, w in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


def mat_inverse(m, dom):
    """Inverse of a square matrix; raises on singular input."""
    n = len(m)
    a = mat_copy(m)
    inv = identity(n, dom)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        f = dom.inv(a[col][col])
        a[col] = [dom.mul(v, f) for v in a[col]]
        inv[col] = [dom.mul(v, f) for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [dom.sub(v, dom.mul(f, w)) for v, w in zip(a[r], a[col])]
                inv[r] = [dom.sub(v, dom.mul(f, w)) for v, w in zip(inv[r], inv[col])]
    return inv


def kernel_basis(m, dom):
    """Basis of the right kernel of an r-by-c matrix (list of c-vectors)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = mat_copy(m)
    pivots = []
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, rows):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = dom.inv(a[row][col])
        a[row] = [dom.mul(v, inv) for v in a[row]]
        for r in range(rows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [dom.sub(v, dom.mul(f, w)) for v, w in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [dom.zero] * cols
        vec[fc] = dom.one
        for r, pc in enumerate(pivots):
            vec[pc] = dom.neg(a[r][fc])
        basis.append(vec)
    return basis


def solve_right(m, rhs, dom):
    """One solution of m x = rhs, or None when inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(m[r]) + [rhs[r]] for r in range(rows)]
    pivots = []
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, rows):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = dom.inv(a[row][col])
        a[row] = [dom.mul(v, inv) for v in a[row]]
        for r in range(rows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [dom.sub(v, dom.mul(f, w)) for v, w in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    for r in range(row, rows):
        if a[r][cols]:
            return None
    x = [dom.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][cols]
    return x


def congruence_diagonalize(gram, dom):
    """Invertible T with T^t G T diagonal, for symmetric G over char != 2.

    Returns (T, diag) where diag is the list of diagonal entries.
    """
    n = len(gram)
    a = mat_copy(gram)
    t = identity(n, dom)

    def add_col(dst, src, factor):
        # column op on a (and mirror row op), recorded in t
        for r in range(n):
            a[r][dst] = dom.add(a[r][dst], dom.mul(factor, a[r][src]))
        for c in range(n):
            a[dst][c] = dom.add(a[dst][c], dom.mul(factor, a[src][c]))
        for r in range(n):
            t[r][dst] = dom.add(t[r][dst], dom.mul(factor, t[r][src]))

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            t[r][i], t[r][j] = t[r][j], t[r][i]

    for k in range(n):
        if not a[k][k]:
            swap = None
            for j in range(k + 1, n):
                if a[j][j]:
                    swap = j
                    break
            if swap is not None:
                swap_cols(k, swap)
            else:
                off = None
                for j in range(k + 1, n):
                    if a[k][j]:
                        off = j
                        break
                if off is None:
                    continue
                add_col(k, off, dom.one)  # makes a[k][k] = 2*a[k][off] != 0
        pivot = a[k][k]
        for j in range(k + 1, n):
            if a[k][j]:
                add_col(j, k, dom.neg(dom.div(a[k][j], pivot)))
    return t, [a[i][i] for i in range(n)]


def is_symmetric(m):
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))
