# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`icnic._pykernels`.

Same signatures, same results (including output order).
"""

from libc.stdlib cimport malloc, free

from icnic.errors import BudgetExceeded


def trace_faces(succ):
    cdef Py_ssize_t nd = len(succ)
    cdef int *s = <int *> malloc(max(nd, 1) * sizeof(int))
    cdef int *fo = <int *> malloc(max(nd, 1) * sizeof(int))
    cdef Py_ssize_t i
    cdef int start, d, f
    try:
        for i in range(nd):
            s[i] = succ[i]
            fo[i] = -1
        walks = []
        for start in range(nd):
            if fo[start] >= 0 or s[start] < 0:
                continue
            f = len(walks)
            walk = []
            d = start
            while fo[d] < 0:
                fo[d] = f
                walk.append(d)
                d = s[d ^ 1]
            walks.append(walk)
        face_of = [fo[i] for i in range(nd)]
        return face_of, walks
    finally:
        free(s)
        free(fo)


def vertex_faces(walks, tails, n):
    cdef int t, nn = n
    out = []
    for walk in walks:
        corner = {}
        for d in walk:
            t = tails[d]
            if t < nn and t not in corner:
                corner[t] = d
        out.append(corner)
    return out


cdef struct State:
    int m
    int nd
    int *succ
    int *pred
    int *deg
    int *anchor
    int *tails
    int *heads
    int *group
    int *fo       # scratch for face tracing
    int *buf      # candidate pairs, 2*nd*nd per level stacked
    long long visits
    long long limit
    int budget_hit


cdef inline void place(State *st, int d, int node, int before) nogil:
    cdef int b
    if before < 0:
        st.succ[d] = d
        st.pred[d] = d
        st.anchor[node] = d
    else:
        b = st.pred[before]
        st.succ[b] = d
        st.pred[d] = b
        st.succ[d] = before
        st.pred[before] = d
    st.deg[node] += 1


cdef inline void unplace(State *st, int d, int node) nogil:
    cdef int a, b
    st.deg[node] -= 1
    if st.deg[node] == 0:
        st.anchor[node] = -1
    else:
        a = st.pred[d]
        b = st.succ[d]
        st.succ[a] = b
        st.pred[b] = a
        if st.anchor[node] == d:
            st.anchor[node] = b
    st.succ[d] = -1
    st.pred[d] = -1


cdef inline bint alternates(State *st, int node) nogil:
    cdef int d, k
    d = st.anchor[node]
    if st.group[d] < 0 or st.deg[node] != 4:
        return True
    for k in range(4):
        if st.group[d] == st.group[st.succ[d]]:
            return False
        d = st.succ[d]
    return True


cdef int collect(State *st, int p, int q, int *out) nogil:
    """Corner pairs (bp, bq) on common faces, in the Python backend's order."""
    cdef int nd = st.nd, start, d, f = 0, cnt = 0, e, x
    for d in range(nd):
        st.fo[d] = -1
    for start in range(nd):
        if st.fo[start] >= 0 or st.succ[start] < 0:
            continue
        d = start
        while st.fo[d] < 0:
            st.fo[d] = f
            d = st.succ[d ^ 1]
        # walk again in order, pairing corners of p with corners of q
        d = start
        while True:
            if st.tails[d] == p:
                e = start
                while True:
                    if st.tails[e] == q:
                        out[2 * cnt] = d
                        out[2 * cnt + 1] = e
                        cnt += 1
                    e = st.succ[e ^ 1]
                    if e == start:
                        break
            d = st.succ[d ^ 1]
            if d == start:
                break
        f += 1
    return cnt


cdef void rec(State *st, int i, list out):
    cdef int p, q, d0, d1, old, new, dold, dnew, b, first, cnt, j
    cdef int *mine
    st.visits += 1
    if st.limit and st.visits > st.limit:
        st.budget_hit = 1
        return
    if i == st.m:
        out.append([st.succ[j] for j in range(st.nd)])
        return
    p = st.tails[2 * i]
    q = st.tails[2 * i + 1]
    d0 = 2 * i
    d1 = 2 * i + 1
    if st.deg[p] == 0 and st.deg[q] == 0:
        place(st, d0, p, -1)
        place(st, d1, q, -1)
        rec(st, i + 1, out)
        unplace(st, d1, q)
        unplace(st, d0, p)
        return
    if st.deg[p] == 0 or st.deg[q] == 0:
        if st.deg[p] == 0:
            old = q; new = p; dold = d1; dnew = d0
        else:
            old = p; new = q; dold = d0; dnew = d1
        place(st, dnew, new, -1)
        # snapshot the corners before touching the rotation
        cnt = st.deg[old]
        mine = st.buf + 2 * st.nd * st.nd * i
        b = st.anchor[old]
        for j in range(cnt):
            mine[j] = b
            b = st.succ[b]
        for j in range(cnt):
            place(st, dold, old, mine[j])
            if alternates(st, old) and alternates(st, new):
                rec(st, i + 1, out)
            unplace(st, dold, old)
            if st.budget_hit:
                break
        unplace(st, dnew, new)
        return
    mine = st.buf + 2 * st.nd * st.nd * i
    cnt = collect(st, p, q, mine)
    for j in range(cnt):
        place(st, d0, p, mine[2 * j])
        place(st, d1, q, mine[2 * j + 1])
        if alternates(st, p) and alternates(st, q):
            rec(st, i + 1, out)
        unplace(st, d1, q)
        unplace(st, d0, p)
        if st.budget_hit:
            break


def enumerate_rotations(num_nodes, ends, group, limit):
    cdef State st
    cdef int m = len(ends), nd = 2 * m, i
    cdef int nn = num_nodes
    st.m = m
    st.nd = nd
    st.visits = 0
    st.limit = limit
    st.budget_hit = 0
    st.succ = <int *> malloc(max(nd, 1) * sizeof(int))
    st.pred = <int *> malloc(max(nd, 1) * sizeof(int))
    st.tails = <int *> malloc(max(nd, 1) * sizeof(int))
    st.heads = <int *> malloc(max(nd, 1) * sizeof(int))
    st.group = <int *> malloc(max(nd, 1) * sizeof(int))
    st.fo = <int *> malloc(max(nd, 1) * sizeof(int))
    st.deg = <int *> malloc(max(nn, 1) * sizeof(int))
    st.anchor = <int *> malloc(max(nn, 1) * sizeof(int))
    st.buf = <int *> malloc(max(2 * nd * nd * (m + 1), 1) * sizeof(int))
    try:
        for i in range(nd):
            st.succ[i] = -1
            st.pred[i] = -1
            st.group[i] = group[i]
        for i in range(m):
            p, q = ends[i]
            st.tails[2 * i] = p
            st.tails[2 * i + 1] = q
            st.heads[2 * i] = q
            st.heads[2 * i + 1] = p
        for i in range(nn):
            st.deg[i] = 0
            st.anchor[i] = -1
        out = []
        rec(&st, 0, out)
        if st.budget_hit:
            raise BudgetExceeded(limit)
        return out, st.visits
    finally:
        free(st.succ); free(st.pred); free(st.tails); free(st.heads)
        free(st.group); free(st.fo); free(st.deg); free(st.anchor); free(st.buf)
