"""Canonical labelling and one-vertex augmentation for small graphs.

Graphs here have at most 16 vertices and are passed as int64 arrays of
row bitmasks. The canonical form is the lexicographically smallest
adjacency code over all labellings that respect the ordered partition
produced by colour refinement (degree first). Column ``j`` of the code
holds the adjacencies of position ``j`` to positions ``0..j-1``, with
earlier positions in more significant bits.
"""

import numpy as np

from ._jit import kernel

MAX_N = 16


@kernel
def refine(rows, n, colour):
    """Refine ``colour`` in place, starting from degrees; returns the cell count.

    Cell order is isomorphism invariant: new colours sort by
    (old colour, neighbour colour counts).
    """
    present = np.zeros(n + 1, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        d = 0
        r = rows[v]
        while r:
            r &= r - 1
            d += 1
        deg[v] = d
        present[d] = 1
    rank = np.zeros(n + 1, dtype=np.int64)
    k = 0
    for d in range(n + 1):
        rank[d] = k
        k += present[d]
    for v in range(n):
        colour[v] = rank[deg[v]]

    key = np.zeros((n, n + 1), dtype=np.int64)
    order = np.arange(n)
    while True:
        for v in range(n):
            key[v, 0] = colour[v]
            for c in range(1, n + 1):
                key[v, c] = 0
            for u in range(n):
                if (rows[v] >> u) & 1:
                    key[v, 1 + colour[u]] += 1
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0:
                y = order[j]
                less = False
                for c in range(k + 1):
                    if key[x, c] != key[y, c]:
                        less = key[x, c] < key[y, c]
                        break
                if not less:
                    break
                order[j + 1] = y
                j -= 1
            order[j + 1] = x
        newk = 1
        nc = np.zeros(n, dtype=np.int64)
        nc[order[0]] = 0
        for i in range(1, n):
            same = True
            for c in range(k + 1):
                if key[order[i], c] != key[order[i - 1], c]:
                    same = False
                    break
            if not same:
                newk += 1
            nc[order[i]] = newk - 1
        for v in range(n):
            colour[v] = nc[v]
        if newk == k:
            return k
        k = newk


@kernel
def canon_search(rows, n, colour, k, perm_out, best):
    """Minimise the adjacency code over colour-respecting labellings.

    Writes a minimising labelling to ``perm_out`` (position -> vertex) and
    the code to ``best``. Returns the bitmask of vertices placed at the
    last position by some minimising labelling, which is one orbit of
    the automorphism group.
    """
    cell_start = np.zeros(k + 1, dtype=np.int64)
    for v in range(n):
        cell_start[colour[v] + 1] += 1
    for c in range(k):
        cell_start[c + 1] += cell_start[c]
    cellv = np.zeros(n, dtype=np.int64)
    fill = cell_start.copy()
    for v in range(n):
        cellv[fill[colour[v]]] = v
        fill[colour[v]] += 1
    pos_cell = np.zeros(n, dtype=np.int64)
    for c in range(k):
        for j in range(cell_start[c], cell_start[c + 1]):
            pos_cell[j] = c

    perm = np.zeros(n, dtype=np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    used = 0
    have_best = False
    less = n + 1
    orbit = 0
    depth = 0
    ptr[0] = cell_start[pos_cell[0]]
    while depth >= 0:
        if depth == n:
            if not have_best or less < n:
                orbit = 0
                for j in range(n):
                    perm_out[j] = perm[j]
                have_best = True
            orbit |= 1 << perm[n - 1]
            less = n + 1
            depth = n - 1
            used &= ~(1 << perm[depth])
            continue
        end = cell_start[pos_cell[depth] + 1]
        advanced = False
        while ptr[depth] < end:
            v = cellv[ptr[depth]]
            ptr[depth] += 1
            if (used >> v) & 1:
                continue
            col = 0
            for i in range(depth):
                if (rows[perm[i]] >> v) & 1:
                    col |= 1 << (n - 1 - i)
            if have_best and less > depth:
                if col > best[depth]:
                    continue
                if col < best[depth]:
                    less = depth
            if not have_best or less <= depth:
                best[depth] = col
            perm[depth] = v
            used |= 1 << v
            depth += 1
            if depth < n:
                ptr[depth] = cell_start[pos_cell[depth]]
            advanced = True
            break
        if not advanced:
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
    return orbit


@kernel
def canonical(rows, n, perm_out, best):
    colour = np.zeros(n, dtype=np.int64)
    k = refine(rows, n, colour)
    return canon_search(rows, n, colour, k, perm_out, best)


@kernel
def augment(prow, m, acc_s, acc_perm, acc_code):
    """Children of the ``m``-vertex parent whose new vertex ``m`` is a canonical deletion.

    The deleted vertex is taken from the last refinement cell (maximum
    degree), so most extensions are rejected before any search.
    Returns the number of accepted neighbourhood masks written to ``acc_s``.
    """
    n = m + 1
    rows = np.zeros(n, dtype=np.int64)
    colour = np.zeros(n, dtype=np.int64)
    perm = np.zeros(n, dtype=np.int64)
    code = np.zeros(n, dtype=np.int64)
    count = 0
    for s in range(1 << m):
        for i in range(m):
            rows[i] = prow[i] | (((s >> i) & 1) << m)
        rows[m] = s
        k = refine(rows, n, colour)
        if colour[m] != k - 1:
            continue
        orbit = canon_search(rows, n, colour, k, perm, code)
        if (orbit >> m) & 1:
            acc_s[count] = s
            for j in range(n):
                acc_perm[count, j] = perm[j]
                acc_code[count, j] = code[j]
            count += 1
    return count
