"""Hot kernels for prime-field arithmetic on int64 arrays.

Each kernel has a numba ``@njit`` implementation and a pure-numpy twin with
identical output. The numba path is used when numba imports and the
environment variable ``CENTRALIZERS_DISABLE_NUMBA`` is unset (or ``0``).
``use_backend`` switches at runtime; benchmarks and tests use it to compare.

All inputs hold canonical residues in ``[0, p)`` with ``p < 2**31`` so a
single product fits in int64.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

MAX_PRIME = 2**31 - 1

_env_off = os.environ.get("CENTRALIZERS_DISABLE_NUMBA", "").strip() not in ("", "0")
BACKEND = "numpy" if (_env_off or numba is None) else "numba"


def use_backend(name):
    """Select ``"numba"`` or ``"numpy"`` kernels; returns the previous name."""
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and numba is None:
        raise RuntimeError("numba is not installed")
    prev, BACKEND = BACKEND, name
    return prev


# ---------------------------------------------------------------- numpy path


def _inv_mod_py(a, p):
    return pow(int(a), -1, p)


def _rref_mod_np(a, p):
    m = np.array(a, dtype=np.int64, copy=True)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r, c:] = (m[r, c:] * _inv_mod_py(m[r, c], p)) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            f = m[others, c][:, None]
            m[others, c:] = (m[others, c:] - f * m[r, c:]) % p
        pivots.append(c)
        r += 1
    return m, np.array(pivots, dtype=np.int64)


def _matmul_mod_np(a, b, p):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[1]
    # largest number of products that can be summed without int64 overflow
    step = max(1, (2**63 - 1) // max(1, (p - 1) ** 2) - 1)
    if inner <= step:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(0, inner, step):
        out = (out + (a[:, k:k + step] @ b[k:k + step]) % p) % p
    return out


def _stdpoly_mod_np(stack, p):
    n, d, _ = stack.shape
    table = np.zeros((1 << n, d, d), dtype=np.int64)
    table[0] = np.eye(d, dtype=np.int64)
    for mask in range(1, 1 << n):
        acc = np.zeros((d, d), dtype=np.int64)
        below = 0
        for i in range(n):
            if mask >> i & 1:
                term = _matmul_mod_np(stack[i], table[mask ^ (1 << i)], p)
                acc = (acc - term) % p if below & 1 else (acc + term) % p
                below += 1
        table[mask] = acc
    return table[(1 << n) - 1]


# ---------------------------------------------------------------- numba path

if numba is not None:

    @numba.njit(cache=True)
    def _inv_mod_nb(a, p):
        t, newt = 0, 1
        r, newr = p, a
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @numba.njit(cache=True)
    def _rref_mod_nb(a, p):
        m = a.copy()
        rows, cols = m.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    tmp = m[r, j]
                    m[r, j] = m[piv, j]
                    m[piv, j] = tmp
            inv = _inv_mod_nb(m[r, c], p)
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    f = m[i, c]
                    for j in range(c, cols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
            pivots[r] = c
            r += 1
        return m, pivots[:r].copy()

    @numba.njit(cache=True)
    def _matmul_mod_nb(a, b, p):
        n, inner = a.shape
        cols = b.shape[1]
        out = np.zeros((n, cols), dtype=np.int64)
        # terms are < p^2; reduce only when the int64 headroom runs out
        room = max(1, (9223372036854775807 - p) // ((p - 1) * (p - 1) + 1))
        for i in range(n):
            used = 0
            for k in range(inner):
                aik = a[i, k]
                if aik == 0:
                    continue
                if used == room:
                    for j in range(cols):
                        out[i, j] %= p
                    used = 0
                for j in range(cols):
                    out[i, j] += aik * b[k, j]
                used += 1
            for j in range(cols):
                out[i, j] %= p
        return out

    @numba.njit(cache=True)
    def _stdpoly_mod_nb(stack, p):
        n, d, _ = stack.shape
        table = np.zeros((1 << n, d, d), dtype=np.int64)
        for i in range(d):
            table[0, i, i] = 1
        for mask in range(1, 1 << n):
            below = 0
            for i in range(n):
                if (mask >> i) & 1:
                    term = _matmul_mod_nb(stack[i], table[mask ^ (1 << i)], p)
                    if below & 1:
                        table[mask] = (table[mask] - term) % p
                    else:
                        table[mask] = (table[mask] + term) % p
                    below += 1
        return table[(1 << n) - 1].copy()


# ---------------------------------------------------------------- dispatch


def rref_mod(a, p):
    """Reduced row echelon form mod ``p``; returns ``(R, pivot_columns)``.

    Pivot search is leftmost column first, topmost nonzero row within it.
    """
    a = np.ascontiguousarray(a, dtype=np.int64)
    if BACKEND == "numba" and a.size:
        return _rref_mod_nb(a, np.int64(p))
    return _rref_mod_np(a, p)


def matmul_mod(a, b, p):
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if BACKEND == "numba" and a.size and b.size:
        return _matmul_mod_nb(a, b, np.int64(p))
    return _matmul_mod_np(a, b, p)


def stdpoly_mod(stack, p):
    """Standard polynomial of the matrices ``stack[0..n-1]`` mod ``p``.

    Uses the subset recursion S(T) = sum_i (-1)^rank(i, T) X_i S(T - {i}),
    which expands to the signed sum over all n! orderings.
    """
    stack = np.ascontiguousarray(stack, dtype=np.int64)
    if BACKEND == "numba":
        return _stdpoly_mod_nb(stack, np.int64(p))
    return _stdpoly_mod_np(stack, p)
