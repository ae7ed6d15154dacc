"""Compiled inner loops. Inputs are CSR adjacency arrays."""

import numba
import numpy as np


@numba.njit(cache=True, nogil=True)
def support_elimination(indptr, indices):
    """Candidate-support elimination over every pivot vertex.

    Returns ``alive``, a mask over CSR positions: position ``q`` of row ``j``
    stays alive iff neighbour ``indices[q]`` survives as a support candidate
    of ``j``.
    """
    n = indptr.size - 1
    alive = np.ones(indices.size, dtype=np.bool_)
    remaining = indptr[1:] - indptr[:-1]
    n2 = np.zeros(n, dtype=np.int64)
    n2_stamp = np.full(n, -1, dtype=np.int64)
    adj_stamp = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        lo = indptr[i]
        hi = indptr[i + 1]
        for p in range(lo, hi):
            adj_stamp[indices[p]] = i
        # number of length-2 paths from i, touched entries only
        for p in range(lo, hi):
            j = indices[p]
            for q in range(indptr[j], indptr[j + 1]):
                k = indices[q]
                if n2_stamp[k] != i:
                    n2_stamp[k] = i
                    n2[k] = 0
                n2[k] += 1
        for p in range(lo, hi):
            j = indices[p]
            if remaining[j] == 0:
                continue
            for q in range(indptr[j], indptr[j + 1]):
                if not alive[q]:
                    continue
                k = indices[q]
                # k-j-i induced and j the only common neighbour of i and k
                if k != i and adj_stamp[k] != i and n2[k] == 1:
                    alive[q] = False
                    remaining[j] -= 1
    return alive
