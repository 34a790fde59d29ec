"""Pure-Python kernels.  Same signatures and results as ``_ckernels``.

All array arguments are 2-D/1-D int64 numpy arrays of integer levels;
``vec`` is always the canonical enumeration of V^X (row i = levels of the
i-th fuzzy set), so ``index(v) = sum(v[t] * (q+1)**(n-1-t))``.
"""

import numpy as np

LAW_MEET, LAW_OPLUS, LAW_ODOT, LAW_MONO = 0, 1, 2, 3
OP_JOIN, OP_MEET, OP_OPLUS, OP_ODOT, OP_SCALAR = 0, 1, 2, 3, 4

BACKEND = "python"


def _weights(n, q):
    return [(q + 1) ** (n - 1 - t) for t in range(n)]


def interior_rows(alphas, opens):
    a = alphas.tolist()
    o = opens.tolist()
    n = alphas.shape[1]
    out = []
    for row in a:
        acc = [0] * n
        for b in o:
            if all(b[t] <= row[t] for t in range(n)):
                for t in range(n):
                    if b[t] > acc[t]:
                        acc[t] = b[t]
        out.append(acc)
    return np.array(out, dtype=np.int64).reshape(alphas.shape[0], n)


def pair_laws(fvec, vec, q, limit):
    """Check meet-preservation, ⊕/⊙ super-preservation and monotonicity of a table over V^X.

    Returns ``(counts[4], witnesses[w, 3])`` with witness rows ``(law, i, j)``,
    at most ``limit`` witnesses per law.
    """
    f = fvec.tolist()
    v = vec.tolist()
    N, n = vec.shape
    w = _weights(n, q)
    counts = [0, 0, 0, 0]
    wit = []
    for i in range(N):
        vi, fi = v[i], f[i]
        for j in range(i, N):
            vj, fj = v[j], f[j]
            im = io = iu = 0
            for t in range(n):
                a, b = vi[t], vj[t]
                im += w[t] * (a if a < b else b)
                s = a + b
                io += w[t] * (q if s > q else s)
                iu += w[t] * (s - q if s > q else 0)
            fm, fo, fu = f[im], f[io], f[iu]
            bad_m = bad_o = bad_u = False
            le_ij = le_ji = True
            for t in range(n):
                a, b = fi[t], fj[t]
                if (a if a < b else b) != fm[t]:
                    bad_m = True
                s = a + b
                if (q if s > q else s) > fo[t]:
                    bad_o = True
                if (s - q if s > q else 0) > fu[t]:
                    bad_u = True
                if vi[t] > vj[t]:
                    le_ij = False
                if vj[t] > vi[t]:
                    le_ji = False
            bad_mono = False
            if le_ij and any(fi[t] > fj[t] for t in range(n)):
                bad_mono = True
            if le_ji and any(fj[t] > fi[t] for t in range(n)):
                bad_mono = True
            for law, bad in ((LAW_MEET, bad_m), (LAW_OPLUS, bad_o), (LAW_ODOT, bad_u),
                             (LAW_MONO, bad_mono)):
                if bad:
                    if counts[law] < limit:
                        wit.append((law, i, j))
                    counts[law] += 1
    return np.array(counts, dtype=np.int64), np.array(wit, dtype=np.int64).reshape(-1, 3)


def u6_joins(mu, vec):
    """joins[i, x] = max{ mu[b, x] : vec[b] <= mu[i] pointwise }, by exhaustive scan over b."""
    m = mu.tolist()
    v = vec.tolist()
    N, n = vec.shape
    out = []
    for i in range(N):
        g = m[i]
        acc = [0] * n
        for b in range(N):
            vb = v[b]
            ok = True
            for t in range(n):
                if vb[t] > g[t]:
                    ok = False
                    break
            if ok:
                mb = m[b]
                for t in range(n):
                    if mb[t] > acc[t]:
                        acc[t] = mb[t]
        out.append(acc)
    return np.array(out, dtype=np.int64).reshape(N, n)


def closure_violations(members, open_idx, vec, q, dlevels, limit):
    """Find pairs of opens whose ∨, ∧, ⊕, ⊙ (or D-scalar multiple) is not a member.

    ``members[i]`` is 1 iff the i-th fuzzy set is in the family.  Witness rows
    are ``(op, a, b)`` with a, b indices into V^X (for OP_SCALAR, a is the
    scalar level).
    """
    mem = members.tolist()
    opens = open_idx.tolist()
    v = vec.tolist()
    n = vec.shape[1]
    w = _weights(n, q)
    counts = [0] * 5
    wit = []

    def hit(op, a, b):
        if counts[op] < limit:
            wit.append((op, a, b))
        counts[op] += 1

    m = len(opens)
    for x in range(m):
        ia = opens[x]
        va = v[ia]
        for y in range(x, m):
            ib = opens[y]
            vb = v[ib]
            ij = im = io = iu = 0
            for t in range(n):
                a, b = va[t], vb[t]
                ij += w[t] * (a if a > b else b)
                im += w[t] * (a if a < b else b)
                s = a + b
                io += w[t] * (q if s > q else s)
                iu += w[t] * (s - q if s > q else 0)
            if not mem[ij]:
                hit(OP_JOIN, ia, ib)
            if not mem[im]:
                hit(OP_MEET, ia, ib)
            if not mem[io]:
                hit(OP_OPLUS, ia, ib)
            if not mem[iu]:
                hit(OP_ODOT, ia, ib)
        for r in dlevels.tolist():
            idx = 0
            for t in range(n):
                s = r + va[t]
                idx += w[t] * (s - q if s > q else 0)
            if not mem[idx]:
                hit(OP_SCALAR, r, ia)
    return np.array(counts, dtype=np.int64), np.array(wit, dtype=np.int64).reshape(-1, 3)
