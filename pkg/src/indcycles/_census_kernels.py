"""Hot loops for induced cycle enumeration.

Adjacency arrives both as ``(n, words)`` uint64 bitset rows (for the
induced-pruning membership tests) and as CSR neighbour lists (for
iteration), so no bit-scan primitive is needed inside the kernels.
"""

import numpy as np

from ._jit import kernel

_ONE = np.uint64(1)


@kernel
def _test(rows, r, x):
    return (rows[r, x >> 6] >> np.uint64(x & 63)) & _ONE


@kernel
def search_from_prefix(adj, indptr, indices, k, path, r, lo, canonical, per_vertex, out, store, count):
    """Extend the induced path ``path[:r]`` to induced ``k``-cycles.

    Candidates must have label ``>= lo``. In canonical mode the closing
    vertex must exceed ``path[1]``, which keeps one of the two traversal
    directions. Returns ``count`` plus the number of cycles found.
    """
    words = adj.shape[1]
    # forb[j]: closed neighbourhoods of path[0..j-2]; inner[j]: of path[1..j-2]
    forb = np.zeros((k + 1, words), dtype=np.uint64)
    inner = np.zeros((k + 1, words), dtype=np.uint64)
    for i in range(r - 1):
        p = path[i]
        for t in range(words):
            forb[r, t] |= adj[p, t]
            if i >= 1:
                inner[r, t] |= adj[p, t]
        forb[r, p >> 6] |= _ONE << np.uint64(p & 63)
        if i >= 1:
            inner[r, p >> 6] |= _ONE << np.uint64(p & 63)

    ptr = np.zeros(k + 1, dtype=np.int64)
    depth = r
    ptr[depth] = indptr[path[depth - 1]]
    last = k - 1
    start = path[0]
    while depth >= r:
        j = depth
        prev = path[j - 1]
        end = indptr[prev + 1]
        pushed = False
        while ptr[j] < end:
            x = indices[ptr[j]]
            ptr[j] += 1
            if x < lo:
                continue
            if j == last:
                if _test(adj, start, x) == 0:
                    continue
                if _test(inner, j, x) != 0:
                    continue
                if canonical and x < path[1]:
                    continue
                if store:
                    for i in range(last):
                        out[count, i] = path[i]
                    out[count, last] = x
                for i in range(last):
                    per_vertex[path[i]] += 1
                per_vertex[x] += 1
                count += 1
            else:
                if _test(forb, j, x) != 0:
                    continue
                path[j] = x
                for t in range(words):
                    forb[j + 1, t] = forb[j, t] | adj[prev, t]
                    if j >= 2:
                        inner[j + 1, t] = inner[j, t] | adj[prev, t]
                    else:
                        inner[j + 1, t] = inner[j, t]
                forb[j + 1, prev >> 6] |= _ONE << np.uint64(prev & 63)
                if j >= 2:
                    inner[j + 1, prev >> 6] |= _ONE << np.uint64(prev & 63)
                depth = j + 1
                ptr[depth] = indptr[x]
                pushed = True
                break
        if not pushed:
            depth -= 1
    return count


@kernel
def census(adj, indptr, indices, k, per_vertex, out, store):
    """Count (and optionally store) every induced k-cycle once.

    Each cycle is found from its smallest vertex, in the direction whose
    second vertex is smaller than the last.
    """
    n = adj.shape[0]
    path = np.zeros(k, dtype=np.int64)
    count = 0
    for s in range(n - k + 1):
        path[0] = s
        count = search_from_prefix(adj, indptr, indices, k, path, 1, s + 1, True, per_vertex, out, store, count)
    return count
