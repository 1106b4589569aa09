# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition kernels; same contracts as ``_pykernels``.

Vertex sets are 64-bit masks, so graphs are limited to 64 vertices.
"""

from libc.stdint cimport uint64_t, int64_t

IMPLEMENTATION = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAXN = 64
DEF MAXC = 256


cdef inline int pc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t reach(const uint64_t* masks, int start, uint64_t within) nogil:
    cdef uint64_t seen = (<uint64_t>1) << start
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= masks[ctz(f)]
            f &= f - 1
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef struct Search:
    int n
    int half
    int equal_size
    int fix_first
    int is_path[2]
    uint64_t masks[MAXN]
    int order[MAXN]
    uint64_t sides[2]
    # constraint partners: for vertex v, entries con_start[v]..con_start[v+1]
    int con_start[MAXN + 1]
    int con_other[2 * MAXC]
    int con_same[2 * MAXC]
    int64_t nodes
    int64_t prunes


cdef int ok(Search* st, int v, int s, uint64_t unassigned) nogil:
    cdef uint64_t bit = (<uint64_t>1) << v
    cdef uint64_t old = st.sides[s]
    cdef uint64_t new = old | bit
    cdef uint64_t nb, f, rest, low, comp, other, sset, wb
    cdef int t, w, ends, k
    if st.equal_size and pc(new) > st.half:
        return 0
    nb = st.masks[v] & old
    if st.is_path[s]:
        if pc(nb) > 2:
            return 0
        f = nb
        while f:
            if pc(st.masks[ctz(f)] & new) > 2:
                return 0
            f &= f - 1
    if nb & (nb - 1):
        rest = nb
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            comp = reach(st.masks, ctz(low), old)
            if comp & rest:
                return 0
    other = st.sides[1 - s]
    for k in range(st.con_start[v], st.con_start[v + 1]):
        wb = (<uint64_t>1) << st.con_other[k]
        if ((new & wb) and not st.con_same[k]) or ((other & wb) and st.con_same[k]):
            return 0
    st.sides[s] = new
    for t in range(2):
        sset = st.sides[t]
        if sset:
            if (reach(st.masks, ctz(sset), sset | unassigned) & sset) != sset:
                st.sides[s] = old
                return 0
            if st.is_path[t]:
                ends = 0
                f = sset
                while f:
                    w = ctz(f)
                    if not (st.masks[w] & unassigned) and pc(st.masks[w] & sset) <= 1:
                        ends += 1
                    f &= f - 1
                if ends > 2:
                    st.sides[s] = old
                    return 0
    st.sides[s] = old
    return 1


cdef int rec(Search* st, int i, uint64_t unassigned) nogil:
    cdef int v, s, last
    cdef uint64_t rest, bit
    st.nodes += 1
    if i == st.n:
        return st.sides[0] != 0 and st.sides[1] != 0
    v = st.order[i]
    bit = (<uint64_t>1) << v
    rest = unassigned & ~bit
    last = 0 if (i == 0 and st.fix_first) else 1
    for s in range(last + 1):
        if ok(st, v, s, rest):
            st.sides[s] |= bit
            if rec(st, i + 1, rest):
                return 1
            st.sides[s] &= ~bit
        else:
            st.prunes += 1
    return 0


def partition_search(int n, masks, order, left_path, right_path, req_internal,
                     req_cross, equal_size, fix_first_left):
    cdef Search st
    cdef int v, k, u, w, found
    cdef uint64_t full
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    pairs = [(int(a), int(b), 1) for a, b in req_internal] + [(int(a), int(b), 0) for a, b in req_cross]
    if len(pairs) > MAXC:
        raise ValueError("too many constraint edges")
    st.n = n
    st.half = n // 2
    st.equal_size = 1 if equal_size else 0
    st.fix_first = 1 if fix_first_left else 0
    st.is_path[0] = 1 if left_path else 0
    st.is_path[1] = 1 if right_path else 0
    for v in range(n):
        st.masks[v] = <uint64_t>masks[v]
        st.order[v] = order[v]
    per = [[] for _ in range(n)]
    for a, b, same in pairs:
        per[a].append((b, same))
        per[b].append((a, same))
    k = 0
    for v in range(n):
        st.con_start[v] = k
        for w, same in per[v]:
            st.con_other[k] = w
            st.con_same[k] = same
            k += 1
    st.con_start[n] = k
    st.sides[0] = 0
    st.sides[1] = 0
    st.nodes = 0
    st.prunes = 0
    full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    with nogil:
        found = rec(&st, 0, full)
    return (int(st.sides[0]) if found else -1), st.nodes, st.prunes


cdef int shape_ok(const uint64_t* masks, uint64_t s, int want_path) nogil:
    cdef int k = 0, deg2 = 0, maxdeg = 0, d
    cdef uint64_t f = s
    if s == 0:
        return 0
    while f:
        d = pc(masks[ctz(f)] & s)
        deg2 += d
        if d > maxdeg:
            maxdeg = d
        k += 1
        f &= f - 1
    if deg2 != 2 * (k - 1):
        return 0
    if want_path and maxdeg > 2:
        return 0
    return reach(masks, ctz(s), s) == s


cdef inline int cons_ok(uint64_t left, int ncons, const int* cu, const int* cv, const int* csame) nogil:
    cdef int k, a, b
    for k in range(ncons):
        a = (left >> cu[k]) & 1
        b = (left >> cv[k]) & 1
        if csame[k] and a != b:
            return 0
        if not csame[k] and a == b:
            return 0
    return 1


def partition_oracle(int n, masks, left_path, right_path, req_internal, req_cross, equal_size):
    cdef uint64_t cm[MAXN]
    cdef int cu[MAXC]
    cdef int cv[MAXC]
    cdef int csame[MAXC]
    cdef int ncons = 0, v, lp, rp, eq, found = 0
    cdef uint64_t full, x, low, ripple, limit, right
    cdef int64_t checked = 0
    if n > MAXN - 1:
        raise ValueError("compiled oracle supports at most 63 vertices")
    for v in range(n):
        cm[v] = <uint64_t>masks[v]
    pairs = [(int(a), int(b), 1) for a, b in req_internal] + [(int(a), int(b), 0) for a, b in req_cross]
    if len(pairs) > MAXC:
        raise ValueError("too many constraint edges")
    for a, b, same in pairs:
        cu[ncons] = a
        cv[ncons] = b
        csame[ncons] = same
        ncons += 1
    lp = 1 if left_path else 0
    rp = 1 if right_path else 0
    full = ((<uint64_t>1) << n) - 1
    limit = (<uint64_t>1) << n
    eq = 1 if equal_size else 0
    with nogil:
        if eq:
            if n % 2 == 0:
                x = ((<uint64_t>1) << (n // 2)) - 1
                while x < limit:
                    checked += 1
                    right = full & ~x
                    if cons_ok(x, ncons, cu, cv, csame) and shape_ok(cm, x, lp) and shape_ok(cm, right, rp):
                        found = 1
                        break
                    low = x & (~x + 1)
                    ripple = x + low
                    x = (((ripple ^ x) >> 2) // low) | ripple
        else:
            x = 1
            while x < full:
                checked += 1
                right = full & ~x
                if cons_ok(x, ncons, cu, cv, csame) and shape_ok(cm, x, lp) and shape_ok(cm, right, rp):
                    found = 1
                    break
                x += 1
    return (int(x) if found else -1), checked
