"""Numeric inner loops with a numba path and a pure-numpy path.

Set ``STARRES_NO_NUMBA=1`` to force the numpy implementations. Both paths
are always importable under explicit names so they can be compared.

Loading the compiled kernels costs a fraction of a second per process, more
than small problems take in numpy. So the numba backend stays on numpy until
one call reaches JIT_MIN_ENTRIES array entries, and uses numba from then on.
"""

import importlib.util
import os

import numpy as np

_DISABLED = os.environ.get("STARRES_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

# numba itself is imported on first use; importing it costs ~0.3 s
HAVE_NUMBA = importlib.util.find_spec("numba") is not None


def rank_mod_p_numpy(A, p):
    """Rank of an integer matrix over F_p by row reduction (vectorized rows)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        below = np.nonzero(A[r + 1:, c])[0] + r + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        r += 1
    return r


def divisibility_masks_numpy(degrees, grid):
    """masks[k, g] is True iff degrees[g] <= grid[k] componentwise."""
    degrees = np.asarray(degrees, dtype=np.int64)
    grid = np.asarray(grid, dtype=np.int64)
    if degrees.shape[0] == 0 or grid.shape[0] == 0:
        return np.zeros((grid.shape[0], degrees.shape[0]), dtype=np.bool_)
    return np.all(degrees[None, :, :] <= grid[:, None, :], axis=2)


def _rank_mod_p_loop(A, p):
    A = A.copy()
    m, n = A.shape
    for i in range(m):
        for j in range(n):
            A[i, j] = A[i, j] % p
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        # modular inverse by extended Euclid
        a, b, x0, x1 = A[r, c], p, 1, 0
        while b:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
        inv = x0 % p
        for j in range(c, n):
            A[r, j] = A[r, j] * inv % p
        for i in range(r + 1, m):
            f = A[i, c]
            if f != 0:
                for j in range(c, n):
                    A[i, j] = (A[i, j] - f * A[r, j]) % p
        r += 1
    return r


def _divisibility_masks_loop(degrees, grid):
    G, n = grid.shape
    N = degrees.shape[0]
    out = np.zeros((G, N), dtype=np.bool_)
    for k in range(G):
        for g in range(N):
            ok = True
            for v in range(n):
                if degrees[g, v] > grid[k, v]:
                    ok = False
                    break
            out[k, g] = ok
    return out


_jitted = {}


def _jit(fn):
    if fn not in _jitted:
        from numba import njit
        _jitted[fn] = njit(cache=True)(fn)
    return _jitted[fn]


def rank_mod_p_numba(A, p):
    A = np.ascontiguousarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    return int(_jit(_rank_mod_p_loop)(A, np.int64(p)))


def divisibility_masks_numba(degrees, grid):
    degrees = np.ascontiguousarray(degrees, dtype=np.int64)
    grid = np.ascontiguousarray(grid, dtype=np.int64)
    return _jit(_divisibility_masks_loop)(degrees, grid)


JIT_MIN_ENTRIES = 1 << 20
_jit_loaded = False


def _use_jit(entries):
    global _jit_loaded
    if not _jit_loaded and entries >= JIT_MIN_ENTRIES:
        _jit_loaded = True
    return _jit_loaded


def _rank_mod_p_lazy(A, p):
    A = np.asarray(A)
    return rank_mod_p_numba(A, p) if _use_jit(A.size) else rank_mod_p_numpy(A, p)


def _divisibility_masks_lazy(degrees, grid):
    degrees, grid = np.asarray(degrees), np.asarray(grid)
    if _use_jit(degrees.shape[0] * grid.shape[0]):
        return divisibility_masks_numba(degrees, grid)
    return divisibility_masks_numpy(degrees, grid)


if HAVE_NUMBA and not _DISABLED:
    BACKEND = "numba"
    rank_mod_p = _rank_mod_p_lazy
    divisibility_masks = _divisibility_masks_lazy
else:
    BACKEND = "numpy"
    rank_mod_p = rank_mod_p_numpy
    divisibility_masks = divisibility_masks_numpy
