"""Conflict-driven clause learning SAT solver.

Literals are DIMACS-style nonzero ints at the API.  Internally literal
``2*v`` is ``+v`` and ``2*v + 1`` is ``-v``, so negation is ``lit ^ 1``.

The search is deterministic: activities start at zero, ties break on the
lowest variable index, restarts follow a Luby schedule.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field


def luby(i: int) -> int:
    """i-th element (1-based) of the Luby sequence 1,1,2,1,1,2,4,..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


def _ilit(lit: int) -> int:
    return 2 * lit if lit > 0 else 2 * (-lit) + 1


def _dlit(ilit: int) -> int:
    v = ilit >> 1
    return -v if ilit & 1 else v


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    restarts: int = 0
    learned: int = 0
    deleted: int = 0
    runtime: float = 0.0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class Solver:
    """Incremental CDCL solver with assumptions.

    ``solve`` returns True (``model`` holds a verified assignment), False
    (``core`` holds the failed assumptions, empty if the clauses alone are
    unsatisfiable) or None when a budget ran out.
    """

    restart_base = 100
    var_decay = 0.95
    clause_decay = 0.999

    def __init__(self, num_vars: int = 0):
        self.num_vars = 0
        self.vals: list[int] = [0, 0]
        self.level: list[int] = [0]
        self.reason: list = [None]
        self.activity: list[float] = [0.0]
        self.polarity: list[int] = [1]  # 1 -> try negative literal first
        self.seen: list[bool] = [False]
        self.watches: list[list] = [[], []]
        self.bin_watches: list[list[int]] = [[], []]
        self.clauses: list[list[int]] = []
        self.learnts: list[list[int]] = []
        self.clause_act: dict[int, float] = {}
        self.clause_lbd: dict[int, int] = {}
        self.original: list[tuple[int, ...]] = []
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.heap: list[tuple[float, int]] = []
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.ok = True
        self.model: list[bool] | None = None
        self.core: list[int] = []
        self.stats = SolverStats()
        self.max_learnts = 0.0
        for _ in range(num_vars):
            self.new_var()

    # -- setup ---------------------------------------------------------------

    def new_var(self) -> int:
        self.num_vars += 1
        v = self.num_vars
        self.vals += [0, 0]
        self.level.append(0)
        self.reason.append(None)
        self.activity.append(0.0)
        self.polarity.append(1)
        self.seen.append(False)
        self.watches += [[], []]
        self.bin_watches += [[], []]
        heapq.heappush(self.heap, (0.0, v))
        return v

    def add_clause(self, lits) -> bool:
        """Add a clause of DIMACS literals; returns False once trivially UNSAT."""
        lits = tuple(lits)
        self.original.append(lits)
        if not self.ok:
            return False
        if self.trail_lim:
            self._cancel_until(0)
        for lit in lits:
            while abs(lit) > self.num_vars:
                self.new_var()
        vals = self.vals
        c: list[int] = []
        for lit in sorted(set(_ilit(x) for x in lits)):
            if lit ^ 1 in c:
                return True  # tautology
            v = vals[lit]
            if v == 1:
                return True
            if v == 0:
                c.append(lit)
        if not c:
            self.ok = False
            return False
        if len(c) == 1:
            self._enqueue(c[0], None)
            if self._propagate() is not None:
                self.ok = False
                return False
            return True
        self._attach(c)
        self.clauses.append(c)
        return True

    def _attach(self, c: list[int]) -> None:
        if len(c) == 2:
            self.bin_watches[c[0]].append(c[1])
            self.bin_watches[c[1]].append(c[0])
        else:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)

    # -- core loop -----------------------------------------------------------

    def _enqueue(self, lit: int, reason) -> None:
        v = lit >> 1
        self.vals[lit] = 1
        self.vals[lit ^ 1] = -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        vals = self.vals
        trail = self.trail
        watches = self.watches
        bin_watches = self.bin_watches
        level = self.level
        reason = self.reason
        dl = len(self.trail_lim)
        qhead = self.qhead
        props = 0
        while qhead < len(trail):
            p = trail[qhead]
            qhead += 1
            props += 1
            false_lit = p ^ 1
            for o in bin_watches[false_lit]:
                vo = vals[o]
                if vo == 1:
                    continue
                if vo == -1:
                    self.qhead = len(trail)
                    self.stats.propagations += props
                    return [o, false_lit]
                vals[o] = 1
                vals[o ^ 1] = -1
                level[o >> 1] = dl
                reason[o >> 1] = [o, false_lit]
                trail.append(o)
            ws = watches[false_lit]
            i = j = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if vals[first] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if vals[lk] != -1:
                        c[1] = lk
                        c[k] = false_lit
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if vals[first] == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        self.stats.propagations += props
                        return c
                    vals[first] = 1
                    vals[first ^ 1] = -1
                    level[first >> 1] = dl
                    reason[first >> 1] = c
                    trail.append(first)
            del ws[j:]
        self.qhead = qhead
        self.stats.propagations += props
        return None

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        vals = self.vals
        reason = self.reason
        pol = self.polarity
        act = self.activity
        heap = self.heap
        start = self.trail_lim[lvl]
        for lit in self.trail[start:]:
            v = lit >> 1
            vals[lit] = 0
            vals[lit ^ 1] = 0
            reason[v] = None
            pol[v] = lit & 1
            heapq.heappush(heap, (-act[v], v))
        del self.trail[start:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)
        if len(heap) > 8 * self.num_vars + 1024:
            self.heap = [(-act[v], v) for v in range(1, self.num_vars + 1) if not vals[2 * v]]
            heapq.heapify(self.heap)

    def _bump_var(self, v: int) -> None:
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for i in range(1, self.num_vars + 1):
                act[i] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-act[i], i) for i in range(1, self.num_vars + 1) if not self.vals[2 * i]]
            heapq.heapify(self.heap)
        elif not self.vals[2 * v]:
            heapq.heappush(self.heap, (-act[v], v))

    def _bump_clause(self, c: list[int]) -> None:
        key = id(c)
        if key in self.clause_act:
            self.clause_act[key] += self.cla_inc
            if self.clause_act[key] > 1e20:
                for k in self.clause_act:
                    self.clause_act[k] *= 1e-20
                self.cla_inc *= 1e-20

    def _analyze(self, confl):
        seen = self.seen
        level = self.level
        reason = self.reason
        trail = self.trail
        dl = len(self.trail_lim)
        learnt = [0]
        path = 0
        p = -1
        idx = len(trail) - 1
        c = confl
        while True:
            self._bump_clause(c)
            for q in c if p < 0 else c[1:]:
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump_var(v)
                    if level[v] >= dl:
                        path += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            c = reason[p >> 1]
            seen[p >> 1] = False
            path -= 1
            if path == 0:
                break
        learnt[0] = p ^ 1

        # local minimisation: drop literals implied by others in the clause
        keep = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r is None:
                keep.append(q)
                continue
            for x in r[1:]:
                if not seen[x >> 1] and level[x >> 1] > 0:
                    keep.append(q)
                    break
        for q in learnt[1:]:
            seen[q >> 1] = False
        learnt = keep

        if len(learnt) == 1:
            bt = 0
        else:
            mi = max(range(1, len(learnt)), key=lambda i: level[learnt[i] >> 1])
            learnt[1], learnt[mi] = learnt[mi], learnt[1]
            bt = level[learnt[1] >> 1]
        lbd = len({level[q >> 1] for q in learnt})
        return learnt, bt, lbd

    def _analyze_final(self, failed: int) -> list[int]:
        """Assumption literals responsible for ``failed`` (the true negation of
        an assumption)."""
        out = [failed ^ 1]
        if not self.trail_lim:
            return out
        seen = self.seen
        seen[failed >> 1] = True
        for lit in reversed(self.trail[self.trail_lim[0]:]):
            v = lit >> 1
            if not seen[v]:
                continue
            r = self.reason[v]
            if r is None:
                out.append(lit)
            else:
                for q in r[1:]:
                    if self.level[q >> 1] > 0:
                        seen[q >> 1] = True
            seen[v] = False
        seen[failed >> 1] = False
        return out

    def _pick_branch(self) -> int:
        heap = self.heap
        vals = self.vals
        act = self.activity
        while heap:
            a, v = heapq.heappop(heap)
            if vals[2 * v] == 0 and -a == act[v]:
                return 2 * v + self.polarity[v]
        return -1

    def _reduce_db(self) -> None:
        reason = self.reason
        vals = self.vals

        def locked(c):
            return vals[c[0]] == 1 and reason[c[0] >> 1] is c

        cand = [c for c in self.learnts if len(c) > 2 and self.clause_lbd[id(c)] > 2 and not locked(c)]
        cand.sort(key=lambda c: (-self.clause_lbd[id(c)], self.clause_act[id(c)]))
        drop = {id(c) for c in cand[: len(cand) // 2]}
        if not drop:
            return
        self.learnts = [c for c in self.learnts if id(c) not in drop]
        for k in drop:
            self.clause_act.pop(k, None)
            self.clause_lbd.pop(k, None)
        self.stats.deleted += len(drop)
        for ws in self.watches:
            ws[:] = [c for c in ws if id(c) not in drop]

    def solve(
        self,
        assumptions=(),
        conflict_budget: int | None = None,
        time_budget: float | None = None,
    ) -> bool | None:
        t0 = time.perf_counter()
        self.model = None
        self.core = []
        try:
            if not self.ok:
                return False
            self._cancel_until(0)
            assumps = [_ilit(a) for a in assumptions]
            for a in assumps:
                while (a >> 1) > self.num_vars:
                    self.new_var()
            if self._propagate() is not None:
                self.ok = False
                return False
            if not self.max_learnts:
                self.max_learnts = max(len(self.clauses) / 3.0, 2000.0)
            conflicts = 0
            restart_no = 0
            while True:
                restart_no += 1
                limit = luby(restart_no) * self.restart_base
                status = self._search(limit, assumps)
                conflicts = self.stats.conflicts
                if status is not None:
                    return status
                self.stats.restarts += 1
                if conflict_budget is not None and conflicts >= conflict_budget:
                    return None
                if time_budget is not None and time.perf_counter() - t0 > time_budget:
                    return None
        finally:
            self.stats.runtime += time.perf_counter() - t0
            if self.model is None:
                self._cancel_until(0)

    def _search(self, nof_conflicts: int, assumps: list[int]) -> bool | None:
        conflicts = 0
        stats = self.stats
        while True:
            confl = self._propagate()
            if confl is not None:
                stats.conflicts += 1
                conflicts += 1
                if not self.trail_lim:
                    self.ok = False
                    return False
                learnt, bt, lbd = self._analyze(confl)
                self._cancel_until(bt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                elif len(learnt) == 2:
                    self._attach(learnt)
                    self._enqueue(learnt[0], learnt)
                    stats.learned += 1
                else:
                    self._attach(learnt)
                    self.learnts.append(learnt)
                    self.clause_act[id(learnt)] = self.cla_inc
                    self.clause_lbd[id(learnt)] = lbd
                    self._enqueue(learnt[0], learnt)
                    stats.learned += 1
                self.var_inc /= self.var_decay
                self.cla_inc /= self.clause_decay
                continue
            if conflicts >= nof_conflicts:
                self._cancel_until(0)
                return None
            if len(self.learnts) - len(self.trail) >= self.max_learnts:
                self._reduce_db()
                self.max_learnts *= 1.1
            next_lit = -1
            while len(self.trail_lim) < len(assumps):
                a = assumps[len(self.trail_lim)]
                va = self.vals[a]
                if va == 1:
                    self.trail_lim.append(len(self.trail))
                elif va == -1:
                    self.core = sorted(_dlit(x) for x in self._analyze_final(a ^ 1))
                    return False
                else:
                    next_lit = a
                    break
            if next_lit < 0:
                next_lit = self._pick_branch()
                if next_lit < 0:
                    self.model = [False] + [self.vals[2 * v] == 1 for v in range(1, self.num_vars + 1)]
                    self._check_model()
                    return True
                stats.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(next_lit, None)

    def _check_model(self) -> None:
        m = self.model
        for cl in self.original:
            if not any(m[x] if x > 0 else not m[-x] for x in cl):
                raise AssertionError(f"model violates clause {cl}")

    def value(self, lit: int) -> bool:
        assert self.model is not None
        return self.model[lit] if lit > 0 else not self.model[-lit]


def solve_cnf(clauses, num_vars: int | None = None, **budget):
    """One-shot solve of a clause list.

    Returns ("SAT", model) with model[v] for v in 1..n, ("UNSAT", None), or
    ("UNKNOWN", None) when the budget ran out.
    """
    s = Solver(num_vars or 0)
    for cl in clauses:
        s.add_clause(cl)
    r = s.solve(**budget)
    if r is True:
        return "SAT", s.model
    if r is False:
        return "UNSAT", None
    return "UNKNOWN", None
