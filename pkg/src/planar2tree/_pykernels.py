"""Pure-Python search kernels; the compiled ``_kernels`` module mirrors these.

Vertex sets are int bitmasks. ``masks[v]`` is the neighbourhood of ``v``.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def _pc(x: int) -> int:
    return bin(x).count("1")


def _reach(masks, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def partition_search(n, masks, order, left_path, right_path, req_internal,
                     req_cross, equal_size, fix_first_left):
    """Depth-first assignment of ``order`` to two sides with pruning.

    Returns ``(left_mask, nodes, prunes)``; ``left_mask`` is -1 when no
    partition exists.
    """
    masks = list(masks)
    is_path = (bool(left_path), bool(right_path))
    half = n // 2
    full = (1 << n) - 1
    # constraint partners per vertex: (other, must_be_same)
    cons = [[] for _ in range(n)]
    for u, v in req_internal:
        cons[u].append((v, True))
        cons[v].append((u, True))
    for u, v in req_cross:
        cons[u].append((v, False))
        cons[v].append((u, False))
    sides = [0, 0]
    stats = [0, 0]  # nodes, prunes

    def ok(v: int, s: int, unassigned: int) -> bool:
        bit = 1 << v
        old = sides[s]
        new = old | bit
        if equal_size and _pc(new) > half:
            return False
        nb = masks[v] & old
        if is_path[s]:
            if _pc(nb) > 2:
                return False
            f = nb
            while f:
                low = f & -f
                if _pc(masks[low.bit_length() - 1] & new) > 2:
                    return False
                f ^= low
        if nb & (nb - 1):
            rest = nb
            while rest:
                low = rest & -rest
                rest ^= low
                comp = _reach(masks, low.bit_length() - 1, old)
                if comp & rest:
                    return False
        other = sides[1 - s]
        for w, same in cons[v]:
            wb = 1 << w
            if (new & wb and not same) or (other & wb and same):
                return False
        sides[s] = new
        try:
            for t in (0, 1):
                st = sides[t]
                if st:
                    low = st & -st
                    if _reach(masks, low.bit_length() - 1, st | unassigned) & st != st:
                        return False
                if is_path[t] and st:
                    ends = 0
                    f = st
                    while f:
                        low = f & -f
                        w = low.bit_length() - 1
                        if not masks[w] & unassigned and _pc(masks[w] & st) <= 1:
                            ends += 1
                        f ^= low
                    if ends > 2:
                        return False
            return True
        finally:
            sides[s] = old

    def rec(i: int, unassigned: int) -> bool:
        stats[0] += 1
        if i == n:
            return sides[0] != 0 and sides[1] != 0
        v = order[i]
        rest = unassigned & ~(1 << v)
        for s in ((0,) if i == 0 and fix_first_left else (0, 1)):
            if ok(v, s, rest):
                sides[s] |= 1 << v
                if rec(i + 1, rest):
                    return True
                sides[s] &= ~(1 << v)
            else:
                stats[1] += 1
        return False

    found = rec(0, full)
    return (sides[0] if found else -1), stats[0], stats[1]


def shape_ok(masks, s: int, want_path: bool) -> bool:
    """Whether the set ``s`` induces a tree (a path if ``want_path``)."""
    if s == 0:
        return False
    k = 0
    deg2 = 0
    maxdeg = 0
    f = s
    while f:
        low = f & -f
        d = _pc(masks[low.bit_length() - 1] & s)
        deg2 += d
        if d > maxdeg:
            maxdeg = d
        k += 1
        f ^= low
    if deg2 != 2 * (k - 1):
        return False
    if want_path and maxdeg > 2:
        return False
    low = s & -s
    return _reach(masks, low.bit_length() - 1, s) == s


def _same_popcount(n: int, k: int):
    """All ``n``-bit masks with ``k`` bits set, in increasing order (Gosper)."""
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def partition_oracle(n, masks, left_path, right_path, req_internal, req_cross, equal_size):
    """Plain enumeration of bipartitions (balanced ones when ``equal_size``).

    Returns ``(left_mask or -1, candidates_checked)``.
    """
    masks = list(masks)
    full = (1 << n) - 1
    checked = 0
    if equal_size:
        if n % 2:
            return -1, 0
        candidates = _same_popcount(n, n // 2)
    else:
        candidates = range(1, full)
    for left in candidates:
        checked += 1
        right = full & ~left
        if any(((left >> u) & 1) != ((left >> v) & 1) for u, v in req_internal):
            continue
        if any(((left >> u) & 1) == ((left >> v) & 1) for u, v in req_cross):
            continue
        if shape_ok(masks, left, left_path) and shape_ok(masks, right, right_path):
            return left, checked
    return -1, checked
