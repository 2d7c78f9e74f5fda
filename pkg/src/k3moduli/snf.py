"""Smith normal form over the integers with unimodular transforms.

``smith_normal_form(A)`` returns ``(D, P, Q)`` with ``P @ A @ Q == D``, where
``P`` and ``Q`` are unimodular and ``D`` is diagonal with non-negative entries
``d_1 | d_2 | ... | d_r`` followed by zeros. All arithmetic is on Python ints;
matrices are lists of lists.
"""


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def _find_pivot(A, t):
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[0])):
            v = A[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best
    return best


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M, dst, src, c):
    # row_dst += c * row_src
    rs, rd = M[src], M[dst]
    for k in range(len(rd)):
        rd[k] += c * rs[k]


def _add_col(M, dst, src, c):
    for row in M:
        row[dst] += c * row[src]


def _snf(A):
    A = [list(map(int, row)) for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    P, Q, Qinv = identity(m), identity(n), identity(n)

    def col_op(j, t, c):
        # A <- A E with E = I + c E_tj; Qinv <- E^-1 Qinv
        _add_col(A, j, t, c)
        _add_col(Q, j, t, c)
        _add_row(Qinv, t, j, -c)

    for t in range(min(m, n)):
        while True:
            piv = _find_pivot(A, t)
            if piv is None:
                return A, P, Q, Qinv
            _, i, j = piv
            if i != t:
                _swap_rows(A, t, i)
                _swap_rows(P, t, i)
            if j != t:
                _swap_cols(A, t, j)
                _swap_cols(Q, t, j)
                _swap_rows(Qinv, t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    _add_row(A, i, t, -q)
                    _add_row(P, i, t, -q)
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_op(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            # pull the offending row up so the next pass sees a smaller remainder
            _add_row(A, t, bad, 1)
            _add_row(P, t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
    return A, P, Q, Qinv


def smith_normal_form(A):
    D, P, Q, _ = _snf(A)
    return D, P, Q


def elementary_divisors(A):
    """Non-zero diagonal of the Smith form, including unit entries."""
    D, _, _, _ = _snf(A)
    k = min(len(D), len(D[0])) if D else 0
    return [D[i][i] for i in range(k) if D[i][i]]


def saturation_basis(vectors):
    """Basis of ``(Q-span of vectors) ∩ Z^n`` and the index of the input span in it.

    The vectors must be linearly independent. With ``P M Q = D`` we have
    ``M = P^-1 D Q^-1``, so the first ``r`` rows of ``Q^-1`` are a basis of the
    saturation, and the index is the product of the elementary divisors.
    """
    D, _, _, Qinv = _snf(vectors)
    r = len(vectors)
    diag = [D[i][i] for i in range(r)]
    if any(x == 0 for x in diag):
        raise ValueError("vectors are linearly dependent")
    index = 1
    for x in diag:
        index *= x
    return [list(Qinv[i]) for i in range(r)], index
