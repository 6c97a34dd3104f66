"""Numba-compiled inner loops (graph search, matching).

Pure array code; every kernel has a straightforward Python/numpy
semantics and is cross-checked against reference implementations in the
test suite.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def min_odd_cycle_bfs(n_nodes, eu, ev, par, upper_bound):
    """Lightest odd-parity cycle in a unit-weight multigraph.

    Links i join eu[i]--ev[i] with parity par[i]; runs BFS in the parity
    double cover from every endpoint of an odd link. Returns the best
    weight found, or upper_bound if none is below it.
    """
    m = eu.shape[0]
    deg = np.zeros(n_nodes, np.int32)
    for i in range(m):
        deg[eu[i]] += 1
        deg[ev[i]] += 1
    ptr = np.zeros(n_nodes + 1, np.int32)
    for v in range(n_nodes):
        ptr[v + 1] = ptr[v] + deg[v]
    total = ptr[n_nodes]
    nbr = np.empty(total, np.int32)
    npar = np.empty(total, np.int8)
    fill = ptr[:n_nodes].copy()
    for i in range(m):
        u, v = eu[i], ev[i]
        nbr[fill[u]] = v
        npar[fill[u]] = par[i]
        fill[u] += 1
        nbr[fill[v]] = u
        npar[fill[v]] = par[i]
        fill[v] += 1

    is_start = np.zeros(n_nodes, np.uint8)
    for i in range(m):
        if par[i] == 1:
            is_start[eu[i]] = 1
            is_start[ev[i]] = 1

    best = upper_bound
    dist = np.empty(2 * n_nodes, np.int32)
    queue = np.empty(2 * n_nodes, np.int32)
    for s in range(n_nodes):
        if not is_start[s]:
            continue
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        target = s + n_nodes
        while head < tail:
            node = queue[head]
            head += 1
            d = dist[node]
            if d + 1 >= best:
                break
            v = node % n_nodes
            sheet = node // n_nodes
            for k in range(ptr[v], ptr[v + 1]):
                ns = sheet ^ npar[k]
                nxt = nbr[k] + n_nodes * ns
                if dist[nxt] == -1:
                    dist[nxt] = d + 1
                    if nxt == target and d + 1 < best:
                        best = d + 1
                    queue[tail] = nxt
                    tail += 1
    return best
