"""Compiled CDCL kernel (numba) with the same interface as ``cdcl.Solver``.

Same algorithm as the reference solver: two watched literals with blocker
literals, first-UIP learning with recursive minimisation, VSIDS with
index tie-breaking, phase saving, Luby restarts and LBD-based clause
deletion.  All state lives in flat numpy arrays; the jitted search returns
to Python when a conflict chunk is used up or an array needs to grow.
"""

from __future__ import annotations

import time
from collections import namedtuple

import numpy as np
from numba import njit

from .cdcl import SolverStats

# int64 scalar slots
NV, TRAIL_LEN, QHEAD, DL, NCL, ATOP, WTOP, HSIZE = 0, 1, 2, 3, 4, 5, 6, 7
CONFLICTS, DECISIONS, PROPS, RESTARTS, LEARNT_LIVE, NEXT_REDUCE, RESTART_IDX = 8, 9, 10, 11, 12, 13, 14
SINCE_RESTART, RESTART_LIMIT, OK, WT, DELETED, NASSUMP, CORE_LEN, REDUCTIONS = 15, 16, 17, 18, 19, 20, 21, 22
LEARNED = 23
N_SLOTS = 32
# float slots
VAR_INC, CLA_INC = 0, 1

UNDEF = 2
F_LEARNT, F_DELETED = 1, 2
R_BUDGET, R_MAINT, R_SAT, R_UNSAT = 0, 1, 10, 20

RESTART_BASE = 100
FIRST_REDUCE = 2000
REDUCE_INC = 300
VAR_DECAY = 0.95
CLA_DECAY = 0.999

State = namedtuple(
    "State",
    "S F assigns level reason trail trail_lim act heap hidx polar seen stamp "
    "A cs cl cf lbd cact wd ws wn wc assump core out stack toclear",
)


def new_state(nv: int, nclauses: int, nlits: int) -> State:
    nv = max(nv, 1)
    S = np.zeros(N_SLOTS, np.int64)
    S[NV] = nv
    S[OK] = 1
    S[NEXT_REDUCE] = FIRST_REDUCE
    S[RESTART_LIMIT] = RESTART_BASE
    S[RESTART_IDX] = 1
    F = np.ones(4, np.float64)
    ccap = max(2 * nclauses, 1024)
    acap = max(2 * nlits, 4096)
    wcap = max(8 * nclauses + 32 * nv + 4096, 8192)
    st = State(
        S, F,
        np.full(nv, UNDEF, np.int8), np.zeros(nv, np.int32), np.full(nv, -1, np.int32),
        np.zeros(nv, np.int32), np.zeros(2 * nv + 2, np.int32), np.zeros(nv, np.float64),
        np.arange(nv, dtype=np.int32), np.arange(nv, dtype=np.int32), np.zeros(nv, np.int8),
        np.zeros(nv, np.int8), np.zeros(nv + 2, np.int32),
        np.zeros(acap, np.int32), np.zeros(ccap, np.int64), np.zeros(ccap, np.int32),
        np.zeros(ccap, np.int8), np.zeros(ccap, np.int32), np.zeros(ccap, np.float64),
        np.zeros(2 * wcap, np.int32), np.zeros(2 * nv, np.int64), np.zeros(2 * nv, np.int32),
        np.zeros(2 * nv, np.int32),
        np.zeros(2 * nv, np.int32), np.zeros(2 * nv + 1, np.int32),
        np.zeros(nv + 1, np.int32), np.zeros(nv + 1, np.int32), np.zeros(nv + 1, np.int32),
    )
    S[HSIZE] = nv
    return st


# ---------------------------------------------------------------------------
# primitives


@njit(cache=True, inline="always")
def _value(st, lit):
    a = st.assigns[lit >> 1]
    if a == UNDEF:
        return UNDEF
    return a ^ (lit & 1)


@njit(cache=True, inline="always")
def _better(act, a, b):
    return act[a] > act[b] or (act[a] == act[b] and a < b)


@njit(cache=True)
def _heap_up(st, i):
    heap, hidx, act = st.heap, st.hidx, st.act
    v = heap[i]
    while i > 0:
        p = (i - 1) >> 1
        if _better(act, v, heap[p]):
            heap[i] = heap[p]
            hidx[heap[i]] = i
            i = p
        else:
            break
    heap[i] = v
    hidx[v] = i


@njit(cache=True)
def _heap_down(st, i):
    heap, hidx, act = st.heap, st.hidx, st.act
    n = st.S[HSIZE]
    v = heap[i]
    while True:
        c = 2 * i + 1
        if c >= n:
            break
        if c + 1 < n and _better(act, heap[c + 1], heap[c]):
            c += 1
        if _better(act, heap[c], v):
            heap[i] = heap[c]
            hidx[heap[i]] = i
            i = c
        else:
            break
    heap[i] = v
    hidx[v] = i


@njit(cache=True)
def _heap_insert(st, v):
    if st.hidx[v] >= 0:
        return
    n = st.S[HSIZE]
    st.heap[n] = v
    st.hidx[v] = n
    st.S[HSIZE] = n + 1
    _heap_up(st, n)


@njit(cache=True)
def _heap_pop(st):
    heap = st.heap
    v = heap[0]
    n = st.S[HSIZE] - 1
    st.S[HSIZE] = n
    st.hidx[v] = -1
    if n > 0:
        last = heap[n]
        heap[0] = last
        st.hidx[last] = 0
        _heap_down(st, 0)
    return v


@njit(cache=True)
def _bump_var(st, v):
    act = st.act
    act[v] += st.F[VAR_INC]
    if act[v] > 1e100:
        for i in range(act.shape[0]):
            act[i] *= 1e-100
        st.F[VAR_INC] *= 1e-100
    if st.hidx[v] >= 0:
        _heap_up(st, st.hidx[v])


@njit(cache=True)
def _bump_clause(st, cid):
    st.cact[cid] += st.F[CLA_INC]
    if st.cact[cid] > 1e20:
        for i in range(st.S[NCL]):
            st.cact[i] *= 1e-20
        st.F[CLA_INC] *= 1e-20


@njit(cache=True)
def _enqueue(st, lit, cid):
    v = lit >> 1
    st.assigns[v] = 1 - (lit & 1)
    st.level[v] = st.S[DL]
    st.reason[v] = cid
    st.trail[st.S[TRAIL_LEN]] = lit
    st.S[TRAIL_LEN] += 1


@njit(cache=True)
def _cancel_until(st, lvl):
    S = st.S
    if S[DL] <= lvl:
        return
    stop = st.trail_lim[lvl]
    for i in range(S[TRAIL_LEN] - 1, stop - 1, -1):
        v = st.trail[i] >> 1
        st.polar[v] = st.assigns[v]
        st.assigns[v] = UNDEF
        st.reason[v] = -1
        _heap_insert(st, v)
    S[TRAIL_LEN] = stop
    S[QHEAD] = stop
    S[DL] = lvl


@njit(cache=True)
def _watch_push(st, lit, cid, blk):
    wd, ws, wn, wc = st.wd, st.ws, st.wn, st.wc
    if wn[lit] == wc[lit]:
        cap = 2 * wc[lit] + 4
        start = st.S[WTOP]
        old = ws[lit]
        for k in range(wn[lit]):
            wd[2 * (start + k)] = wd[2 * (old + k)]
            wd[2 * (start + k) + 1] = wd[2 * (old + k) + 1]
        ws[lit] = start
        wc[lit] = cap
        st.S[WTOP] = start + cap
    pos = 2 * (ws[lit] + wn[lit])
    wd[pos] = cid
    wd[pos + 1] = blk
    wn[lit] += 1


@njit(cache=True)
def _attach(st, cid):
    base = st.cs[cid]
    a = st.A[base]
    b = st.A[base + 1]
    w = -cid - 1 if st.cl[cid] == 2 else cid
    _watch_push(st, a, w, b)
    _watch_push(st, b, w, a)
    st.S[WT] += 2


@njit(cache=True)
def rebuild_watches(st):
    """Re-lay all watch lists from the clause arena; False if wd is too small."""
    S = st.S
    nl = 2 * S[NV]
    cnt = np.zeros(nl, np.int64)
    live = 0
    for cid in range(S[NCL]):
        if st.cf[cid] & F_DELETED:
            continue
        base = st.cs[cid]
        cnt[st.A[base]] += 1
        cnt[st.A[base + 1]] += 1
        live += 1
    total = 0
    for lit in range(nl):
        total += 2 * cnt[lit] + 4
    if 2 * total > st.wd.shape[0]:
        return False
    pos = 0
    for lit in range(nl):
        st.ws[lit] = pos
        st.wn[lit] = 0
        st.wc[lit] = 2 * cnt[lit] + 4
        pos += st.wc[lit]
    S[WTOP] = pos
    for cid in range(S[NCL]):
        if st.cf[cid] & F_DELETED:
            continue
        base = st.cs[cid]
        a = st.A[base]
        b = st.A[base + 1]
        w = -cid - 1 if st.cl[cid] == 2 else cid
        p = 2 * (st.ws[a] + st.wn[a])
        st.wd[p] = w
        st.wd[p + 1] = b
        st.wn[a] += 1
        p = 2 * (st.ws[b] + st.wn[b])
        st.wd[p] = w
        st.wd[p + 1] = a
        st.wn[b] += 1
    S[WT] = 2 * live
    return True


@njit(cache=True)
def needs_maintenance(st):
    S = st.S
    nv = S[NV]
    if S[ATOP] + nv + 2 > st.A.shape[0]:
        return True
    if S[NCL] + 2 > st.cs.shape[0]:
        return True
    if 2 * (S[WTOP] + 4 * S[WT] + 16 * nv + 1024) > st.wd.shape[0]:
        return True
    return False


# ---------------------------------------------------------------------------
# propagation and learning


@njit(cache=True)
def _propagate(st):
    S = st.S
    A, cs, cl, cf, wd, ws, wn = st.A, st.cs, st.cl, st.cf, st.wd, st.ws, st.wn
    confl = -1
    while S[QHEAD] < S[TRAIL_LEN]:
        p = st.trail[S[QHEAD]]
        S[QHEAD] += 1
        S[PROPS] += 1
        fl = p ^ 1
        start = ws[fl]
        n = wn[fl]
        i = 0
        j = 0
        while i < n:
            pi = 2 * (start + i)
            cid = wd[pi]
            blk = wd[pi + 1]
            vb = _value(st, blk)
            if vb == 1:
                pj = 2 * (start + j)
                wd[pj] = cid
                wd[pj + 1] = blk
                i += 1
                j += 1
                continue
            if cid < 0:
                # binary clause: the blocker is the other literal
                c = -cid - 1
                pj = 2 * (start + j)
                wd[pj] = cid
                wd[pj + 1] = blk
                i += 1
                j += 1
                if vb == 0:
                    confl = c
                    S[QHEAD] = S[TRAIL_LEN]
                    while i < n:
                        wd[2 * (start + j)] = wd[2 * (start + i)]
                        wd[2 * (start + j) + 1] = wd[2 * (start + i) + 1]
                        i += 1
                        j += 1
                else:
                    base = cs[c]
                    if A[base] != blk:
                        A[base + 1] = A[base]
                        A[base] = blk
                    _enqueue(st, blk, c)
                continue
            if cf[cid] & F_DELETED:
                i += 1
                continue
            base = cs[cid]
            if A[base] == fl:
                A[base] = A[base + 1]
                A[base + 1] = fl
            first = A[base]
            if first != blk and _value(st, first) == 1:
                pj = 2 * (start + j)
                wd[pj] = cid
                wd[pj + 1] = first
                i += 1
                j += 1
                continue
            moved = False
            for k in range(2, cl[cid]):
                lk = A[base + k]
                if _value(st, lk) != 0:
                    A[base + 1] = lk
                    A[base + k] = fl
                    _watch_push(st, lk, cid, first)
                    moved = True
                    break
            i += 1
            if moved:
                continue
            pj = 2 * (start + j)
            wd[pj] = cid
            wd[pj + 1] = first
            j += 1
            if _value(st, first) == 0:
                confl = cid
                S[QHEAD] = S[TRAIL_LEN]
                while i < n:
                    wd[2 * (start + j)] = wd[2 * (start + i)]
                    wd[2 * (start + j) + 1] = wd[2 * (start + i) + 1]
                    i += 1
                    j += 1
            else:
                _enqueue(st, first, cid)
        wn[fl] = j
        if confl >= 0:
            break
    return confl


@njit(cache=True, inline="always")
def _abstract(st, v):
    return 1 << (st.level[v] & 31)


@njit(cache=True)
def _lit_redundant(st, p, abstract, ntc):
    """Recursive minimisation test; returns the new toclear length or -1."""
    top = ntc
    stack = st.stack
    sp = 0
    stack[sp] = p
    sp += 1
    while sp > 0:
        sp -= 1
        q = stack[sp]
        c = st.reason[q >> 1]
        base = st.cs[c]
        for k in range(1, st.cl[c]):
            l = st.A[base + k]
            v = l >> 1
            if st.seen[v] == 0 and st.level[v] > 0:
                if st.reason[v] >= 0 and (_abstract(st, v) & abstract) != 0:
                    st.seen[v] = 1
                    stack[sp] = l
                    sp += 1
                    st.toclear[ntc] = l
                    ntc += 1
                else:
                    for t in range(top, ntc):
                        st.seen[st.toclear[t] >> 1] = 0
                    return -1
    return ntc


@njit(cache=True)
def _analyze(st, confl):
    """First-UIP clause into st.out; returns (length, backjump level, lbd)."""
    S = st.S
    out = st.out
    seen = st.seen
    dl = S[DL]
    path = 0
    p = -1
    n = 1
    idx = S[TRAIL_LEN] - 1
    while True:
        if st.cf[confl] & F_LEARNT:
            _bump_clause(st, confl)
        base = st.cs[confl]
        start = 0 if p == -1 else 1
        for k in range(start, st.cl[confl]):
            q = st.A[base + k]
            v = q >> 1
            if seen[v] == 0 and st.level[v] > 0:
                _bump_var(st, v)
                seen[v] = 1
                if st.level[v] >= dl:
                    path += 1
                else:
                    out[n] = q
                    n += 1
        while seen[st.trail[idx] >> 1] == 0:
            idx -= 1
        p = st.trail[idx]
        idx -= 1
        confl = st.reason[p >> 1]
        seen[p >> 1] = 0
        path -= 1
        if path == 0:
            break
    out[0] = p ^ 1

    # minimisation
    ntc = 0
    for k in range(1, n):
        st.toclear[ntc] = out[k]
        ntc += 1
    abstract = 0
    for k in range(1, n):
        abstract |= _abstract(st, out[k] >> 1)
    j = 1
    for k in range(1, n):
        v = out[k] >> 1
        if st.reason[v] < 0:
            out[j] = out[k]
            j += 1
        else:
            r = _lit_redundant(st, out[k], abstract, ntc)
            if r < 0:
                out[j] = out[k]
                j += 1
            else:
                ntc = r
    n = j
    for t in range(ntc):
        seen[st.toclear[t] >> 1] = 0

    bt = 0
    if n > 1:
        mi = 1
        for k in range(2, n):
            if st.level[out[k] >> 1] > st.level[out[mi] >> 1]:
                mi = k
        tmp = out[1]
        out[1] = out[mi]
        out[mi] = tmp
        bt = st.level[out[1] >> 1]

    # literal block distance
    S[N_SLOTS - 1] += 1
    stamp = S[N_SLOTS - 1]
    lbd = 0
    for k in range(n):
        lv = st.level[out[k] >> 1]
        if st.stamp[lv] != stamp:
            st.stamp[lv] = stamp
            lbd += 1
    return n, bt, lbd


@njit(cache=True)
def _analyze_final(st, p):
    """Core (negated assumptions) for the falsified assumption ~p into st.core."""
    S = st.S
    st.core[0] = p
    n = 1
    if S[DL] == 0:
        S[CORE_LEN] = n
        return
    seen = st.seen
    seen[p >> 1] = 1
    for i in range(S[TRAIL_LEN] - 1, st.trail_lim[0] - 1, -1):
        x = st.trail[i] >> 1
        if seen[x]:
            c = st.reason[x]
            if c < 0:
                st.core[n] = st.trail[i] ^ 1
                n += 1
            else:
                base = st.cs[c]
                for k in range(1, st.cl[c]):
                    v = st.A[base + k] >> 1
                    if st.level[v] > 0:
                        seen[v] = 1
            seen[x] = 0
    seen[p >> 1] = 0
    S[CORE_LEN] = n


@njit(cache=True)
def _luby(i):
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while i != (1 << k) - 1:
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1
    return 1 << (k - 1)


@njit(cache=True)
def _locked(st, cid):
    lit = st.A[st.cs[cid]]
    return st.reason[lit >> 1] == cid and _value(st, lit) == 1


@njit(cache=True)
def _reduce_db(st):
    S = st.S
    m = 0
    cand = np.empty(S[NCL], np.int64)
    for cid in range(S[NCL]):
        if (st.cf[cid] & F_LEARNT) and not (st.cf[cid] & F_DELETED):
            if st.cl[cid] > 2 and st.lbd[cid] > 2 and not _locked(st, cid):
                cand[m] = cid
                m += 1
    cand = cand[:m]
    # worst first: high lbd, then low activity
    order = np.argsort(st.cact[cand], kind="mergesort")
    cand = cand[order]
    order = np.argsort(-st.lbd[cand], kind="mergesort")
    cand = cand[order]
    for t in range(m // 2):
        cid = cand[t]
        st.cf[cid] |= F_DELETED
        S[LEARNT_LIVE] -= 1
        S[DELETED] += 1
    # compact the arena in clause order, then re-lay the watches
    pos = 0
    for cid in range(S[NCL]):
        if st.cf[cid] & F_DELETED:
            continue
        base = st.cs[cid]
        if base != pos:
            for k in range(st.cl[cid]):
                st.A[pos + k] = st.A[base + k]
            st.cs[cid] = pos
        pos += st.cl[cid]
    S[ATOP] = pos
    rebuild_watches(st)


@njit(cache=True)
def _store_clause(st, lits, n, learnt):
    S = st.S
    cid = S[NCL]
    S[NCL] += 1
    base = S[ATOP]
    for k in range(n):
        st.A[base + k] = lits[k]
    S[ATOP] = base + n
    st.cs[cid] = base
    st.cl[cid] = n
    st.cf[cid] = F_LEARNT if learnt else 0
    st.cact[cid] = 0.0
    st.lbd[cid] = 0
    _attach(st, cid)
    return cid


@njit(cache=True)
def add_clauses(st, flat, offsets, first):
    """Add original clauses ``first..`` at level 0.  Returns the index of the
    first clause not added (maintenance needed) or len(offsets) - 1."""
    S = st.S
    nc = offsets.shape[0] - 1
    buf = np.empty(S[NV] * 2 + 1, np.int32)
    mark = np.zeros(2 * S[NV], np.int8)
    for c in range(first, nc):
        if S[OK] == 0:
            return nc
        if needs_maintenance(st):
            return c
        n = 0
        taut = False
        sat = False
        for k in range(offsets[c], offsets[c + 1]):
            l = flat[k]
            if mark[l]:
                continue
            if mark[l ^ 1]:
                taut = True
            mark[l] = 1
            val = _value(st, l)
            if val == 1:
                sat = True
            elif val == UNDEF:
                buf[n] = l
                n += 1
        for k in range(offsets[c], offsets[c + 1]):
            mark[flat[k]] = 0
        if taut or sat:
            continue
        if n == 0:
            S[OK] = 0
        elif n == 1:
            _enqueue(st, buf[0], -1)
            if _propagate(st) >= 0:
                S[OK] = 0
        else:
            _store_clause(st, buf, n, False)
    return nc


@njit(cache=True)
def cancel_to_root(st):
    _cancel_until(st, 0)


@njit(cache=True)
def search(st, conflict_limit):
    S = st.S
    end = S[CONFLICTS] + conflict_limit
    out = st.out
    while True:
        if needs_maintenance(st):
            return R_MAINT
        confl = _propagate(st)
        if confl >= 0:
            S[CONFLICTS] += 1
            S[SINCE_RESTART] += 1
            if S[DL] == 0:
                S[OK] = 0
                S[CORE_LEN] = 0
                return R_UNSAT
            n, bt, lbd = _analyze(st, confl)
            _cancel_until(st, bt)
            if n == 1:
                _enqueue(st, out[0], -1)
            else:
                cid = _store_clause(st, out, n, True)
                st.lbd[cid] = lbd
                _bump_clause(st, cid)
                S[LEARNT_LIVE] += 1
                S[LEARNED] += 1
                _enqueue(st, out[0], cid)
            st.F[VAR_INC] /= VAR_DECAY
            st.F[CLA_INC] /= CLA_DECAY
            continue
        if S[SINCE_RESTART] >= S[RESTART_LIMIT]:
            _cancel_until(st, 0)
            S[RESTARTS] += 1
            S[RESTART_IDX] += 1
            S[RESTART_LIMIT] = _luby(S[RESTART_IDX]) * RESTART_BASE
            S[SINCE_RESTART] = 0
            continue
        if S[CONFLICTS] >= end:
            return R_BUDGET
        if S[CONFLICTS] >= S[NEXT_REDUCE]:
            S[REDUCTIONS] += 1
            S[NEXT_REDUCE] = S[CONFLICTS] + FIRST_REDUCE + REDUCE_INC * S[REDUCTIONS]
            _reduce_db(st)
            continue
        nxt = -1
        while S[DL] < S[NASSUMP]:
            a = st.assump[S[DL]]
            val = _value(st, a)
            if val == 1:
                st.trail_lim[S[DL]] = S[TRAIL_LEN]
                S[DL] += 1
            elif val == 0:
                _analyze_final(st, a ^ 1)
                return R_UNSAT
            else:
                nxt = a
                break
        if nxt < 0:
            while S[HSIZE] > 0:
                v = _heap_pop(st)
                if st.assigns[v] == UNDEF:
                    nxt = 2 * v + (1 if st.polar[v] == 0 else 0)
                    break
            if nxt < 0:
                return R_SAT
            S[DECISIONS] += 1
        st.trail_lim[S[DL]] = S[TRAIL_LEN]
        S[DL] += 1
        _enqueue(st, nxt, -1)


# ---------------------------------------------------------------------------
# Python front end


def _ilit(lit: int) -> int:
    v = abs(lit) - 1
    return 2 * v + (lit < 0)


def _dlit(ilit: int) -> int:
    v = (ilit >> 1) + 1
    return -v if ilit & 1 else v


def _grow(arr: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, arr.dtype)
    out[: arr.shape[0]] = arr
    return out


class FastSolver:
    """Drop-in replacement for ``cdcl.Solver`` backed by the compiled kernel.

    Variables must all exist before the first ``solve``; clauses may be
    added between calls.
    """

    chunk = 20000

    def __init__(self, num_vars: int = 0):
        self.num_vars = num_vars
        self.original: list[tuple[int, ...]] = []
        self._pending: list[tuple[int, ...]] = []
        self.st: State | None = None
        self.model: list[bool] | None = None
        self.core: list[int] = []
        self.stats = SolverStats()
        self._t_total = 0.0

    def new_var(self) -> int:
        if self.st is not None:
            raise RuntimeError("variables must be created before the first solve")
        self.num_vars += 1
        return self.num_vars

    def add_clause(self, lits) -> bool:
        lits = tuple(lits)
        for x in lits:
            if x == 0:
                raise ValueError("0 is not a literal")
            if abs(x) > self.num_vars:
                if self.st is not None:
                    raise RuntimeError("variables must be created before the first solve")
                self.num_vars = abs(x)
        self.original.append(lits)
        self._pending.append(lits)
        return True

    @property
    def ok(self) -> bool:
        return self.st is None or bool(self.st.S[OK])

    def _maintain(self):
        st = self.st
        S = st.S
        nv = int(S[NV])
        if S[ATOP] + nv + 2 > st.A.shape[0]:
            st = st._replace(A=_grow(st.A, 2 * st.A.shape[0] + nv))
        if S[NCL] + 2 > st.cs.shape[0]:
            size = 2 * st.cs.shape[0]
            st = st._replace(
                cs=_grow(st.cs, size), cl=_grow(st.cl, size), cf=_grow(st.cf, size),
                lbd=_grow(st.lbd, size), cact=_grow(st.cact, size),
            )
        need = 8 * int(S[WT]) + 32 * nv + 4096
        if 2 * need > st.wd.shape[0]:
            st = st._replace(wd=np.zeros(2 * need, np.int32))
        if not rebuild_watches(st):
            raise AssertionError("watch area still too small after growth")
        self.st = st

    def _flush(self):
        if self.st is None:
            nl = sum(len(c) for c in self._pending)
            self.st = new_state(self.num_vars, len(self._pending), nl)
        else:
            cancel_to_root(self.st)
        if not self._pending:
            return
        flat = np.fromiter((_ilit(x) for c in self._pending for x in c), np.int32)
        offsets = np.zeros(len(self._pending) + 1, np.int64)
        offsets[1:] = np.cumsum([len(c) for c in self._pending])
        self._pending = []
        first = 0
        while True:
            first = add_clauses(self.st, flat, offsets, first)
            if first >= len(offsets) - 1:
                break
            self._maintain()

    def solve(self, assumptions=(), conflict_budget: int | None = None, time_budget: float | None = None):
        t0 = time.perf_counter()
        self.model = None
        self.core = []
        try:
            self._flush()
            st = self.st
            if not st.S[OK]:
                return False
            cancel_to_root(st)
            assumps = list(dict.fromkeys(_ilit(a) for a in assumptions))
            for a in assumps:
                if (a >> 1) >= self.num_vars:
                    raise ValueError(f"assumption on unknown variable {_dlit(a)}")
            st.assump[: len(assumps)] = assumps
            st.S[NASSUMP] = len(assumps)
            start_conf = int(st.S[CONFLICTS])
            while True:
                # short chunks keep wall-clock budgets honest
                limit = self.chunk if time_budget is None else min(self.chunk, 500)
                if conflict_budget is not None:
                    left = conflict_budget - (int(self.st.S[CONFLICTS]) - start_conf)
                    if left <= 0:
                        return None
                    limit = min(limit, left)
                code = search(self.st, limit)
                if code == R_MAINT:
                    self._maintain()
                    continue
                if code == R_SAT:
                    a = self.st.assigns
                    self.model = [False] + [bool(a[v] == 1) for v in range(self.num_vars)]
                    self._check_model()
                    return True
                if code == R_UNSAT:
                    n = int(self.st.S[CORE_LEN])
                    self.core = sorted(_dlit(int(x) ^ 1) for x in self.st.core[:n])
                    return False
                if time_budget is not None and time.perf_counter() - t0 > time_budget:
                    return None
        finally:
            self.st.S[NASSUMP] = 0
            self._sync_stats(time.perf_counter() - t0)

    def _sync_stats(self, dt: float):
        S = self.st.S
        s = self.stats
        s.decisions = int(S[DECISIONS])
        s.propagations = int(S[PROPS])
        s.conflicts = int(S[CONFLICTS])
        s.restarts = int(S[RESTARTS])
        s.learned = int(S[LEARNED])
        s.deleted = int(S[DELETED])
        s.runtime += dt

    def _check_model(self) -> None:
        m = self.model
        for cl in self.original:
            if not any(m[x] if x > 0 else not m[-x] for x in cl):
                raise AssertionError(f"model violates clause {cl}")

    def value(self, lit: int) -> bool:
        assert self.model is not None
        return self.model[lit] if lit > 0 else not self.model[-lit]
