"""Independent reference computations.

Nothing here calls into mvtop's algorithms: values are plain Fractions,
opens are tuples, and frames are read only through their raw tables.
The aim is a second, deliberately naive route to every number the tests
freeze.
"""

from fractions import Fraction as F
from itertools import product

import numpy as np


def oplus(a, b):
    return min(F(1), a + b)


def odot(a, b):
    return max(F(0), a + b - 1)


def vec_op(op, a, b):
    return tuple(op(x, y) for x, y in zip(a, b))


def naive_closure(n, q, dvals, gens):
    """Least family of Fraction-tuples with 0, 1, gens closed under ∨ ∧ ⊕ ⊙ and r⊙-.

    Recomputes all pairs each round until nothing new appears.
    """
    fam = {tuple([F(0)] * n), tuple([F(1)] * n)} | {tuple(g) for g in gens}
    while True:
        new = set(fam)
        for a in fam:
            for r in dvals:
                new.add(tuple(odot(F(r), x) for x in a))
            for b in fam:
                new.add(vec_op(max, a, b))
                new.add(vec_op(min, a, b))
                new.add(vec_op(oplus, a, b))
                new.add(vec_op(odot, a, b))
        if new == fam:
            return fam
        fam = new


def fractions_of(S):
    """Opens of an MVSpace as Fraction tuples."""
    return {tuple(F(v) for v in o.values) for o in S.opens}


def naive_interior(opens, alpha):
    acc = [F(0)] * len(alpha)
    for o in opens:
        if all(x <= y for x, y in zip(o, alpha)):
            acc = [max(x, y) for x, y in zip(acc, o)]
    return tuple(acc)


def witness_value(opens, alpha, i):
    """Largest β(x) over opens β ≤ α, found by listing the attaining opens."""
    below = [o for o in opens if all(x <= y for x, y in zip(o, alpha))]
    best = max(o[i] for o in below)
    assert any(o[i] == best for o in below)
    return best


def all_fuzzy(n, q):
    return [tuple(F(k, q) for k in levels) for levels in product(range(q + 1), repeat=n)]


def brute_points(M, q):
    """Every assignment of M's elements into Ł_q that preserves all operations.

    Columns are filled in plain index order and every clause is tested as
    soon as all of its elements have a column; no order-based pruning.
    Returns a sorted list of level tuples.
    """
    n = len(M)
    J, Mt, P, T = (np.asarray(t) for t in (M.join, M.meet, M.plus, M.times))
    scal = {int(r * q): np.asarray(row) for r, row in ((F(r), M.scalar[r]) for r in M.D.values)}
    clauses = []  # (elements involved, checker)
    clauses.append(((M.one,), lambda A: A[:, M.one] == q))
    clauses.append(((M.zero,), lambda A: A[:, M.zero] == 0))
    for a in range(n):
        for b in range(n):
            for tab, fn in ((J, lambda x, y: np.maximum(x, y)), (Mt, lambda x, y: np.minimum(x, y)),
                            (P, lambda x, y: np.minimum(q, x + y)),
                            (T, lambda x, y: np.maximum(0, x + y - q))):
                c = int(tab[a, b])
                clauses.append(((a, b, c),
                                lambda A, a=a, b=b, c=c, fn=fn: fn(A[:, a], A[:, b]) == A[:, c]))
        for k, row in scal.items():
            c = int(row[a])
            clauses.append(((a, c), lambda A, a=a, c=c, k=k: np.maximum(0, k + A[:, a] - q) == A[:, c]))
    ready = [[] for _ in range(n)]
    for elems, chk in clauses:
        ready[max(elems)].append(chk)
    A = np.zeros((1, 0), dtype=np.int64)
    for col in range(n):
        vals = np.arange(q + 1, dtype=np.int64)
        A = np.hstack([np.repeat(A, q + 1, axis=0), np.tile(vals, len(A))[:, None]])
        keep = np.ones(len(A), dtype=bool)
        for chk in ready[col]:
            keep &= chk(A)
        A = A[keep]
    return sorted(tuple(int(v) for v in row) for row in A)


def d_frame_law_violations(M):
    """Count law violations of a table-presented frame by plain loops."""
    n = len(M)
    J, Mt, P, T = (t.tolist() for t in (M.join, M.meet, M.plus, M.times))
    bad = 0
    for a in range(n):
        for b in range(n):
            bad += J[a][b] != J[b][a]
            bad += Mt[a][b] != Mt[b][a]
            bad += P[a][b] != P[b][a]
            for c in range(n):
                bad += T[T[a][b]][c] != T[a][T[b][c]]
                bad += T[a][J[b][c]] != J[T[a][b]][T[a][c]]
                bad += Mt[a][J[b][c]] != J[Mt[a][b]][Mt[a][c]]
                bad += P[a][Mt[b][c]] != Mt[P[a][b]][P[a][c]]
    return bad
