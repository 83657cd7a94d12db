"""Branch-and-bound kernels.

Each kernel decides vertices in index order, trying the smallest choice
first (exclude before include, weight 0 before 1 before 2), and replaces the
incumbent only on strict improvement. The first optimum reached is therefore
the lexicographically smallest witness, which makes results deterministic.

Pruning uses elementary counting bounds only. Nothing here relies on the
theorems the package verifies, so the kernels stay usable as evidence for them.

All kernels expect a graph with n >= 1 and return ``(value, witness)`` where
the witness is a bitmask or a weight tuple.
"""

from __future__ import annotations

from ..graph import Graph, distance2_masks, iter_bits


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _due_lists(n: int, masks: list[int]) -> list[list[int]]:
    """due[i] lists the vertices u whose mask (plus u) is fully decided once vertex i is."""
    due: list[list[int]] = [[] for _ in range(n)]
    for u, m in enumerate(masks):
        due[max(u, (m | 1 << u).bit_length() - 1)].append(u)
    return due


def _greedy_dominating(g: Graph) -> int:
    full, dom, size = g.full, 0, 0
    while dom != full:
        v = max(range(g.n), key=lambda x: ((g.closed(x) & ~dom).bit_count(), -x))
        dom |= g.closed(v)
        size += 1
    return size


def min_dominating(g: Graph) -> tuple[int, int]:
    n, full = g.n, g.full
    closed = [g.closed(v) for v in range(n)]
    due = _due_lists(n, list(g.adj))
    cover = g.max_degree + 1
    best_val, best_set = _greedy_dominating(g) + 1, 0

    def dfs(i: int, d: int, dom: int, size: int) -> None:
        nonlocal best_val, best_set
        if size + _ceil_div((full & ~dom).bit_count(), cover) >= best_val:
            return
        if i == n:
            best_val, best_set = size, d
            return
        for nd, ndom, ns in ((d, dom, size), (d | 1 << i, dom | closed[i], size + 1)):
            if all(ndom >> u & 1 for u in due[i]):
                dfs(i + 1, nd, ndom, ns)

    dfs(0, 0, 0, 0)
    return best_val, best_set


def min_two_dominating(g: Graph) -> tuple[int, int]:
    n, adj = g.n, g.adj
    due = _due_lists(n, list(adj))
    per_vertex = g.max_degree + 2
    best_val, best_set = n + 1, 0

    def deficit(d: int) -> int:
        total = 0
        for u in range(n):
            if not d >> u & 1:
                h = (adj[u] & d).bit_count()
                if h < 2:
                    total += 2 - h
        return total

    def dfs(i: int, d: int, size: int) -> None:
        nonlocal best_val, best_set
        if size + _ceil_div(deficit(d), per_vertex) >= best_val:
            return
        if i == n:
            best_val, best_set = size, d
            return
        for nd, ns in ((d, size), (d | 1 << i, size + 1)):
            if all(nd >> u & 1 or (adj[u] & nd).bit_count() >= 2 for u in due[i]):
                dfs(i + 1, nd, ns)

    dfs(0, 0, 0)
    return best_val, best_set


def min_semitotal(g: Graph) -> tuple[int, int]:
    """Caller guarantees no isolated vertices."""
    n, full = g.n, g.full
    closed = [g.closed(v) for v in range(n)]
    near = distance2_masks(g)
    due_dom = _due_lists(n, list(g.adj))
    due_near = _due_lists(n, near)
    cover = g.max_degree + 1
    best_val, best_set = n + 1, 0

    def dfs(i: int, d: int, dom: int, size: int) -> None:
        nonlocal best_val, best_set
        if max(2, size + _ceil_div((full & ~dom).bit_count(), cover)) >= best_val:
            return
        if i == n:
            best_val, best_set = size, d
            return
        for nd, ndom, ns in ((d, dom, size), (d | 1 << i, dom | closed[i], size + 1)):
            if all(ndom >> u & 1 for u in due_dom[i]) and all(
                not nd >> u & 1 or near[u] & nd for u in due_near[i]
            ):
                dfs(i + 1, nd, ndom, ns)

    dfs(0, 0, 0, 0)
    return best_val, best_set


def max_independent(g: Graph) -> tuple[int, int]:
    n, adj = g.n, g.adj
    # greedy min-degree start gives a value the search must match or beat
    cand, greedy = g.full, 0
    while cand:
        v = min(iter_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        cand &= ~(adj[v] | 1 << v)
        greedy += 1
    best_val, best_set = greedy - 1, 0

    def dfs(i: int, s: int, cand: int, size: int) -> None:
        nonlocal best_val, best_set
        if size + cand.bit_count() <= best_val:
            return
        if i == n:
            best_val, best_set = size, s
            return
        bit = 1 << i
        dfs(i + 1, s, cand & ~bit, size)
        if cand & bit:
            dfs(i + 1, s | bit, cand & ~bit & ~adj[i], size + 1)

    dfs(0, 0, g.full, 0)
    return best_val, best_set


def min_vertex_cover(g: Graph) -> tuple[int, int]:
    n, adj = g.n, g.adj
    best_val, best_set = n + 1, 0

    def matching_bound(free: int) -> int:
        count = 0
        while free:
            v = free.bit_length() - 1
            free &= ~(1 << v)
            nb = adj[v] & free
            if nb:
                free &= ~(nb & -nb)
                count += 1
        return count

    def dfs(i: int, c: int, forced: int, size: int) -> None:
        nonlocal best_val, best_set
        undecided = g.full >> i << i
        free = undecided & ~forced
        if size + forced.bit_count() + matching_bound(free) >= best_val:
            return
        if i == n:
            best_val, best_set = size, c
            return
        bit = 1 << i
        decided = bit - 1
        if not forced & bit and adj[i] & decided & ~c == 0:
            dfs(i + 1, c, forced | (adj[i] & undecided & ~bit), size)
        dfs(i + 1, c | bit, forced & ~bit, size + 1)

    dfs(0, 0, 0, 0)
    return best_val, best_set


def max_differential(g: Graph) -> tuple[int, int]:
    """Maximise |Ne(S)| - |S| by minimising 2|S| + |V minus N[S]|."""
    n, full = g.n, g.full
    closed = [g.closed(v) for v in range(n)]
    due = _due_lists(n, list(g.adj))
    span = g.max_degree + 1
    best_cost, best_set = n + 1, 0

    def rest_bound(k: int) -> int:
        return k if span <= 2 else _ceil_div(2 * k, span)

    def dfs(i: int, s: int, cov: int, size: int, lost: int) -> None:
        nonlocal best_cost, best_set
        open_ = (full & ~cov).bit_count() - lost
        if 2 * size + lost + rest_bound(open_) >= best_cost:
            return
        if i == n:
            best_cost, best_set = 2 * size + lost, s
            return
        for ns, ncov, nsize in ((s, cov, size), (s | 1 << i, cov | closed[i], size + 1)):
            nlost = lost + sum(1 for u in due[i] if not ncov >> u & 1)
            dfs(i + 1, ns, ncov, nsize, nlost)

    dfs(0, 0, 0, 0, 0)
    return n - best_cost, best_set


def max_strong_differential(g: Graph) -> tuple[int, int]:
    """Maximise over dominating sets D of n - |D| - |Dw| (minimise |D| + |Dw|).

    A vertex outside D whose neighbourhood is fully decided and meets D in a
    single vertex v pins v as weak for every completion.
    """
    n, adj, full = g.n, g.adj, g.full
    closed = [g.closed(v) for v in range(n)]
    due = _due_lists(n, list(adj))
    cover = g.max_degree + 1
    best_cost, best_set = n + 1, 0

    def dfs(i: int, d: int, dom: int, size: int, weak: int) -> None:
        nonlocal best_cost, best_set
        if size + weak.bit_count() + _ceil_div((full & ~dom).bit_count(), cover) >= best_cost:
            return
        if i == n:
            best_cost, best_set = size + weak.bit_count(), d
            return
        for nd, ndom, nsize in ((d, dom, size), (d | 1 << i, dom | closed[i], size + 1)):
            nweak = weak
            ok = True
            for u in due[i]:
                if not ndom >> u & 1:
                    ok = False
                    break
                if not nd >> u & 1:
                    x = adj[u] & nd
                    if x & (x - 1) == 0:
                        nweak |= x
            if ok:
                dfs(i + 1, nd, ndom, nsize, nweak)

    dfs(0, 0, 0, 0, 0)
    return n - best_cost, best_set


def min_italian(g: Graph) -> tuple[int, tuple[int, ...]]:
    n, adj = g.n, g.adj
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    due = _due_lists(n, list(adj))
    per_unit = g.max_degree + 2
    w = [0] * n
    seen = [0] * n
    best_val, best_w = n + 1, tuple([1] * n)

    def demand(i: int) -> int:
        total = 0
        for u in range(n):
            if (u >= i or w[u] == 0) and seen[u] < 2:
                total += 2 - seen[u]
        return total

    def dfs(i: int, total: int) -> None:
        nonlocal best_val, best_w
        if total + _ceil_div(demand(i), per_unit) >= best_val:
            return
        if i == n:
            best_val, best_w = total, tuple(w)
            return
        for val in (0, 1, 2):
            w[i] = val
            for u in nbrs[i]:
                seen[u] += val
            if all(w[u] or seen[u] >= 2 for u in due[i]):
                dfs(i + 1, total + val)
            for u in nbrs[i]:
                seen[u] -= val
        w[i] = 0

    dfs(0, 0)
    return best_val, best_w


def min_roman(g: Graph) -> tuple[int, tuple[int, ...]]:
    n, adj = g.n, g.adj
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    due = _due_lists(n, list(adj))
    span = g.max_degree + 1
    w = [0] * n
    twos = [0] * n
    best_val, best_w = n + 1, tuple([1] * n)

    def bound(i: int) -> int:
        k = sum(1 for u in range(n) if (u >= i or w[u] == 0) and not twos[u])
        return k if span <= 2 else _ceil_div(2 * k, span)

    def dfs(i: int, total: int) -> None:
        nonlocal best_val, best_w
        if total + bound(i) >= best_val:
            return
        if i == n:
            best_val, best_w = total, tuple(w)
            return
        for val in (0, 1, 2):
            w[i] = val
            if val == 2:
                for u in nbrs[i]:
                    twos[u] += 1
            if all(w[u] or twos[u] for u in due[i]):
                dfs(i + 1, total + val)
            if val == 2:
                for u in nbrs[i]:
                    twos[u] -= 1
        w[i] = 0

    dfs(0, 0)
    return best_val, best_w
