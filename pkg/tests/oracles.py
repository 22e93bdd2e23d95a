"""Independent reference computations used to freeze derived values.

Deliberately naive: dense lists, column-by-column elimination, no shared
code with the library's sparse echelon routine.
"""

from fractions import Fraction


def naive_rank(rows):
    """Rank by column-wise Gaussian elimination on a copy."""
    a = [[Fraction(x) if not hasattr(x, "p") else x for x in r] for r in rows]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == n_rows:
            break
    return r


def naive_matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def in_span(vectors, v):
    return naive_rank(list(vectors)) == naive_rank(list(vectors) + [list(v)])


def naive_inverse(m):
    """Gauss-Jordan inverse of a square list-of-lists matrix."""
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def balanced_tensor_dim(mult, unit, comult, counit, antipode):
    """dim(H ⊗_R H) from raw structure constants.

    ``R`` is spanned by the columns of ``Π^L(g) = ε(1₁g)1₂``; the relations are
    ``S⁻¹(r)x ⊗ y - x ⊗ ry`` over a spanning set of ``R`` and all basis ``x, y``.
    """
    n = len(unit)

    def mul(u, v):
        out = [Fraction(0)] * n
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        for k, z in enumerate(mult[i][j]):
                            out[k] += x * y * z
        return out

    delta_one = [sum((comult[k][i] * unit[i] for i in range(n)), Fraction(0))
                 for k in range(n * n)]
    spanning = []
    for g in range(n):
        eg = [Fraction(int(i == g)) for i in range(n)]
        v = [Fraction(0)] * n
        for k, c in enumerate(delta_one):
            if c:
                p, q = divmod(k, n)
                ep = [Fraction(int(i == p)) for i in range(n)]
                w = sum((a * b for a, b in zip(counit, mul(ep, eg))), Fraction(0))
                v[q] += c * w
        spanning.append(v)
    inv = naive_inverse(antipode)
    rows = []
    for r in spanning:
        t = [sum((inv[i][j] * r[j] for j in range(n)), Fraction(0)) for i in range(n)]
        for x in range(n):
            ex = [Fraction(int(i == x)) for i in range(n)]
            left = mul(t, ex)
            for y in range(n):
                ey = [Fraction(int(i == y)) for i in range(n)]
                right = mul(r, ey)
                rows.append([left[i] * ey[j] - ex[i] * right[j]
                             for i in range(n) for j in range(n)])
    return n * n - naive_rank(rows)


def affine_solvable(columns, constant):
    """Whether ``Σ xᵢ·columns[i] + constant = 0`` has a solution."""
    if not constant:
        return True
    rows = [[col[r] for col in columns] for r in range(len(constant))]
    augmented = [row + [-c] for row, c in zip(rows, constant)]
    return naive_rank(rows) == naive_rank(augmented)
