"""Pure-Python versions of the hot loops.

The compiled module ``icnic._ckernels`` exposes the same three functions
with identical results; :mod:`icnic.kernels` picks one at import time.

Dart conventions shared by both backends: dart ``2*i`` runs along edge
(or segment) ``i`` from its first end to its second, ``2*i + 1`` the other
way, so the twin of ``d`` is ``d ^ 1``.  ``succ[d]`` is the rotation
successor of ``d`` at its tail and a face walk steps ``d -> succ[d ^ 1]``.
"""

from __future__ import annotations

from icnic.errors import BudgetExceeded


def trace_faces(succ):
    """Partition darts into face walks.

    Returns ``(face_of, walks)``; faces are numbered in order of their
    smallest dart and every walk starts at that dart.  Entries of ``succ``
    equal to -1 mark absent darts, which are skipped.
    """
    nd = len(succ)
    face_of = [-1] * nd
    walks = []
    for start in range(nd):
        if face_of[start] >= 0 or succ[start] < 0:
            continue
        f = len(walks)
        walk = []
        d = start
        while face_of[d] < 0:
            face_of[d] = f
            walk.append(d)
            d = succ[d ^ 1]
        walks.append(walk)
    return face_of, walks


def vertex_faces(walks, tails, n):
    """For each face, the original vertices on it in first-visit order and
    the first dart leaving each of them (the canonical corner)."""
    out = []
    for walk in walks:
        corner = {}
        for d in walk:
            t = tails[d]
            if t < n and t not in corner:
                corner[t] = d
        out.append(corner)
    return out


def enumerate_rotations(num_nodes, ends, group, limit):
    """All rotation systems of a connected graph that embed on the sphere.

    ``ends[i] = (p, q)`` lists the edges in an order where every prefix is
    connected.  Edges are added one at a time: a tree edge may take any
    slot at its old endpoint, a closing edge any pair of corners of its
    endpoints on a common face.  Each spherical embedding is produced
    exactly once.  ``group[d]`` is -1 for ordinary darts; darts leaving a
    crossing hub carry 0 or 1 and the hub's final rotation must alternate.

    Returns ``(embeddings, visited)``: a list of ``succ`` arrays and the
    number of search nodes visited.  ``limit`` caps that number
    (``BudgetExceeded`` beyond it); 0 means unlimited.
    """
    m = len(ends)
    nd = 2 * m
    succ = [-1] * nd
    pred = [-1] * nd
    deg = [0] * num_nodes
    anchor = [-1] * num_nodes
    tails = [0] * nd
    for i, (p, q) in enumerate(ends):
        tails[2 * i] = p
        tails[2 * i + 1] = q
    out = []
    visits = [0]

    def place(d, node, before):
        if before < 0:
            succ[d] = pred[d] = d
            anchor[node] = d
        else:
            b = pred[before]
            succ[b] = d
            pred[d] = b
            succ[d] = before
            pred[before] = d
        deg[node] += 1

    def unplace(d, node):
        deg[node] -= 1
        if deg[node] == 0:
            anchor[node] = -1
        else:
            a, b = pred[d], succ[d]
            succ[a] = b
            pred[b] = a
            if anchor[node] == d:
                anchor[node] = b
        succ[d] = pred[d] = -1

    def alternates(node):
        if group[anchor[node]] < 0 or deg[node] != 4:
            return True
        d = anchor[node]
        for _ in range(4):
            if group[d] == group[succ[d]]:
                return False
            d = succ[d]
        return True

    def corners(node):
        d = anchor[node]
        res = [d]
        e = succ[d]
        while e != d:
            res.append(e)
            e = succ[e]
        return res

    def rec(i):
        visits[0] += 1
        if limit and visits[0] > limit:
            raise BudgetExceeded(limit)
        if i == m:
            out.append(list(succ))
            return
        p, q = ends[i]
        d0, d1 = 2 * i, 2 * i + 1
        if deg[p] == 0 and deg[q] == 0:
            place(d0, p, -1)
            place(d1, q, -1)
            rec(i + 1)
            unplace(d1, q)
            unplace(d0, p)
            return
        if deg[p] == 0 or deg[q] == 0:
            if deg[p] == 0:
                old, new, dold, dnew = q, p, d1, d0
            else:
                old, new, dold, dnew = p, q, d0, d1
            place(dnew, new, -1)
            for b in corners(old):
                place(dold, old, b)
                if alternates(old) and alternates(new):
                    rec(i + 1)
                unplace(dold, old)
            unplace(dnew, new)
            return
        face_of, walks = trace_faces(succ)
        for walk in walks:
            cp = [d for d in walk if tails[d] == p]
            if not cp:
                continue
            cq = [d for d in walk if tails[d] == q]
            for bp in cp:
                for bq in cq:
                    place(d0, p, bp)
                    place(d1, q, bq)
                    if alternates(p) and alternates(q):
                        rec(i + 1)
                    unplace(d1, q)
                    unplace(d0, p)

    rec(0)
    return out, visits[0]
