import heapq
import random
import time
from typing import Iterable, List, Optional, Sequence, Tuple

from pomsat.config import logger, settings
from pomsat.types.solver import SatOutcome, SatStatus, SolverStats

# Literals are coded as 2 * var + sign, sign 1 meaning negated.
Clause = List[int]


def luby(i: int) -> int:
    """The ``i``-th term (1-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""

    while True:
        k = 1
        while (1 << k) - 1 < i:
            k += 1
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1


def _code(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class CdclSolver:
    """Conflict-driven clause learning SAT solver.

    Two watched literals, first-UIP learning, VSIDS branching with phase
    saving, Luby restarts and periodic reduction of learned clauses. Runs are
    reproducible for a given ``seed``.
    """

    def __init__(
        self,
        num_vars: int,
        clauses: Iterable[Sequence[int]],
        *,
        seed: int = 0,
        conflict_budget: Optional[int] = None,
        restart_base: Optional[int] = None,
        var_decay: float = 0.95,
    ):
        self.num_vars = num_vars
        self.seed = seed
        self.conflict_budget = conflict_budget
        self.restart_base = restart_base or settings.restart_base
        self.var_decay = var_decay

        n = num_vars + 1
        self._values = [0] * n
        self._level = [0] * n
        self._reason: List[Optional[Clause]] = [None] * n
        self._polarity = [-1] * n
        self._seen = [False] * n
        self._watches: List[List[Clause]] = [[] for _ in range(2 * n)]
        self._trail: List[int] = []
        self._trail_lim: List[int] = []
        self._qhead = 0
        self._clauses: List[Clause] = []
        self._learnts: List[Clause] = []
        self._ok = True

        rng = random.Random(seed)
        self._activity = [0.0] + [rng.random() * 1e-5 for _ in range(num_vars)]
        self._var_inc = 1.0
        self._heap = [(-self._activity[v], v) for v in range(1, n)]
        heapq.heapify(self._heap)

        self._conflicts = 0
        self._decisions = 0
        self._propagations = 0
        self._restarts = 0
        self._learned = 0

        for clause in clauses:
            self._add_input_clause(clause)

    # Assignment

    def _lit_value(self, code: int) -> int:
        v = self._values[code >> 1]
        return -v if code & 1 else v

    def _enqueue(self, code: int, reason: Optional[Clause]) -> None:
        v = code >> 1
        self._values[v] = -1 if code & 1 else 1
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(code)

    def _attach(self, clause: Clause) -> None:
        self._watches[clause[0]].append(clause)
        self._watches[clause[1]].append(clause)

    def _add_input_clause(self, clause: Sequence[int]) -> None:
        if not self._ok:
            return
        codes: List[int] = []
        seen = set()
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError(f"Literal {lit} out of range 1..{self.num_vars}")
            code = _code(lit)
            if code ^ 1 in seen:
                return
            if code not in seen:
                seen.add(code)
                codes.append(code)
        # Only level-0 facts are assigned while clauses are being added.
        kept: List[int] = []
        for code in codes:
            value = self._lit_value(code)
            if value == 1:
                return
            if value == 0:
                kept.append(code)
        if not kept:
            self._ok = False
        elif len(kept) == 1:
            self._enqueue(kept[0], None)
        else:
            self._clauses.append(kept)
            self._attach(kept)

    # Propagation

    def _propagate(self) -> Optional[Clause]:
        trail = self._trail
        values = self._values
        watches = self._watches
        while self._qhead < len(trail):
            false_lit = trail[self._qhead] ^ 1
            self._qhead += 1
            self._propagations += 1
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
                first_value = values[first >> 1]
                if first & 1:
                    first_value = -first_value
                if first_value == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    vk = values[lk >> 1]
                    if lk & 1:
                        vk = -vk
                    if vk != -1:
                        c[1] = lk
                        c[k] = false_lit
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if first_value == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self._qhead = len(trail)
                        return c
                    self._enqueue(first, c)
            del ws[j:]
        return None

    # Conflict analysis

    def _analyze(self, conflict: Clause) -> Tuple[Clause, int]:
        seen = self._seen
        level = self._level
        trail = self._trail
        current = len(self._trail_lim)
        learnt = [0]
        counter = 0
        p = -1
        idx = len(trail) - 1
        clause = conflict
        while True:
            for k in range(0 if p == -1 else 1, len(clause)):
                q = clause[k]
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if level[v] >= current:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            v = p >> 1
            seen[v] = False
            counter -= 1
            if counter == 0:
                break
            reason = self._reason[v]
            assert reason is not None
            clause = reason
        learnt[0] = p ^ 1
        for q in learnt[1:]:
            seen[q >> 1] = False

        if len(learnt) == 1:
            return learnt, 0
        max_i = 1
        for k in range(2, len(learnt)):
            if level[learnt[k] >> 1] > level[learnt[max_i] >> 1]:
                max_i = k
        learnt[1], learnt[max_i] = learnt[max_i], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _record(self, learnt: Clause) -> None:
        self._learned += 1
        if len(learnt) == 1:
            self._enqueue(learnt[0], None)
            return
        self._learnts.append(learnt)
        self._attach(learnt)
        self._enqueue(learnt[0], learnt)

    def _cancel_until(self, target_level: int) -> None:
        if len(self._trail_lim) <= target_level:
            return
        start = self._trail_lim[target_level]
        for code in reversed(self._trail[start:]):
            v = code >> 1
            self._polarity[v] = self._values[v]
            self._values[v] = 0
            self._reason[v] = None
            heapq.heappush(self._heap, (-self._activity[v], v))
        del self._trail[start:]
        del self._trail_lim[target_level:]
        self._qhead = len(self._trail)

    # Branching heuristic

    def _bump(self, v: int) -> None:
        activity = self._activity[v] + self._var_inc
        self._activity[v] = activity
        if activity > 1e100:
            self._rescale()
        else:
            heapq.heappush(self._heap, (-activity, v))

    def _rescale(self) -> None:
        self._activity = [a * 1e-100 for a in self._activity]
        self._var_inc *= 1e-100
        self._rebuild_heap()

    def _rebuild_heap(self) -> None:
        self._heap = [
            (-self._activity[v], v)
            for v in range(1, self.num_vars + 1)
            if self._values[v] == 0
        ]
        heapq.heapify(self._heap)

    def _pick_branch_literal(self) -> int:
        if len(self._heap) > 8 * (self.num_vars + 16):
            self._rebuild_heap()
        heap = self._heap
        while heap:
            neg_activity, v = heapq.heappop(heap)
            if self._values[v] != 0 or -neg_activity != self._activity[v]:
                continue
            return 2 * v if self._polarity[v] == 1 else 2 * v + 1
        return -1

    # Learned clause database

    def _locked(self, clause: Clause) -> bool:
        if self._reason[clause[0] >> 1] is not clause:
            return False
        return self._lit_value(clause[0]) == 1

    def _reduce_db(self) -> None:
        self._learnts.sort(key=len)
        half = len(self._learnts) // 2
        self._learnts = [
            c
            for i, c in enumerate(self._learnts)
            if i < half or len(c) <= 2 or self._locked(c)
        ]
        for ws in self._watches:
            ws.clear()
        for c in self._clauses:
            self._attach(c)
        for c in self._learnts:
            self._attach(c)

    # Search

    def _search(self) -> SatStatus:
        if not self._ok or self._propagate() is not None:
            return SatStatus.UNSAT
        until_restart = luby(1) * self.restart_base
        max_learnts = max(len(self._clauses) / 3.0, 2000.0)
        while True:
            conflict = self._propagate()
            if conflict is not None:
                self._conflicts += 1
                if not self._trail_lim:
                    return SatStatus.UNSAT
                learnt, backtrack_level = self._analyze(conflict)
                self._cancel_until(backtrack_level)
                self._record(learnt)
                self._var_inc /= self.var_decay
                if (
                    self.conflict_budget is not None
                    and self._conflicts >= self.conflict_budget
                ):
                    return SatStatus.UNKNOWN
                until_restart -= 1
                if until_restart <= 0:
                    self._restarts += 1
                    until_restart = luby(self._restarts + 1) * self.restart_base
                    self._cancel_until(0)
                continue

            if len(self._learnts) - len(self._trail) >= max_learnts:
                self._reduce_db()
                max_learnts *= 1.1
            code = self._pick_branch_literal()
            if code < 0:
                return SatStatus.SAT
            self._decisions += 1
            self._trail_lim.append(len(self._trail))
            self._enqueue(code, None)

    def solve(self) -> SatOutcome:
        started = time.perf_counter()
        status = self._search()
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        stats = SolverStats(
            conflicts=self._conflicts,
            decisions=self._decisions,
            propagations=self._propagations,
            restarts=self._restarts,
            learned=self._learned,
            time_ms=elapsed_ms,
        )
        model = None
        if status == SatStatus.SAT:
            model = tuple(self._values[v] == 1 for v in range(1, self.num_vars + 1))
        logger.debug(
            f"CDCL finished {status.value} on {self.num_vars} vars: "
            + f"{stats.conflicts} conflicts, {stats.decisions} decisions, "
            + f"{elapsed_ms:.1f} ms"
        )
        return SatOutcome(status=status, model=model, stats=stats, backend="embedded")


def solve_embedded(
    num_vars: int,
    clauses: Iterable[Sequence[int]],
    *,
    seed: Optional[int] = None,
    conflict_budget: Optional[int] = None,
) -> SatOutcome:
    solver = CdclSolver(
        num_vars,
        clauses,
        seed=settings.seed if seed is None else seed,
        conflict_budget=(
            settings.conflict_budget if conflict_budget is None else conflict_budget
        ),
    )
    return solver.solve()
