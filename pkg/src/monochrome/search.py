"""Avoidance-coloring search: can an r-coloring of a window keep every
pattern instance non-monochromatic?

The backtracker assigns colors only to elements that occur in at least
one candidate (anything else is unconstrained and gets color 1 in a
found coloring), most-constrained element first, and skips a color as
soon as it would complete a monochromatic candidate.  Exhausting the
space is reported as Forced, a completed assignment as AvoidanceFound,
and hitting the node budget as Timeout — a first-class outcome, never a
silent truncation.

The same instance exports to DIMACS CNF (satisfiable exactly when an
avoidance coloring exists) for external solvers, with a model decoder
that rebuilds and validates the coloring.  Over Z, moreira_number turns
the Forced/AvoidanceFound boundary into a least-window-size threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .colorings import Coloring
from .patterns import PolyFamily, ScanConstraints, pattern_elements
from .rings import (
    RingKind,
    Window,
    WindowParams,
    enumerate_window,
    format_element,
)


class AvoidanceInstance:
    """A window, a color count and the deduplicated candidate list: every
    pattern instance fully inside the window that passes the constraints,
    in canonical scan order (y outer, x inner), one per element set."""

    __slots__ = ("window", "r", "family", "constraints", "candidates", "index_sets")

    def __init__(self, window: Window, r: int, family: PolyFamily,
                 constraints: ScanConstraints, candidates: tuple, index_sets: tuple):
        self.window = window
        self.r = r
        self.family = family
        self.constraints = constraints
        self.candidates = candidates
        self.index_sets = index_sets

    def __repr__(self) -> str:
        return (
            f"<avoidance instance |W|={len(self.window)} r={self.r} "
            f"candidates={len(self.candidates)}>"
        )


def build_instance(window: Window, r: int, family: PolyFamily,
                   constraints: Optional[ScanConstraints] = None) -> AvoidanceInstance:
    """Enumerate candidates in scan order, deduplicated by element set.

    Candidates must lie fully inside the window regardless of the
    constraint flags: monochromaticity of a partially visible instance
    is not decidable from window data.
    """
    if r < 1:
        raise ValueError(f"color count must be >= 1, got {r}")
    if window.spec != family.spec:
        raise ValueError("window and family from different rings")
    if constraints is None:
        constraints = ScanConstraints.defaults_for(window.spec)
    index = window.index
    seen = set()
    candidates = []
    index_sets = []
    for y in window.elements:
        if not constraints.admits_y(y):
            continue
        for x in window.elements:
            if not constraints.admits_x(x):
                continue
            inst = pattern_elements(x, y, family)
            if constraints.forbid_degenerate and inst.degenerate:
                continue
            positions = []
            inside = True
            for e in inst.elements:
                pos = index.get(e)
                if pos is None:
                    inside = False
                    break
                positions.append(pos)
            if not inside:
                continue
            key = frozenset(positions)
            if key in seen:
                continue
            seen.add(key)
            candidates.append(inst)
            index_sets.append(tuple(sorted(key)))
    return AvoidanceInstance(window, r, family, constraints,
                             tuple(candidates), tuple(index_sets))


class AvoidanceStatus(Enum):
    FOUND = "avoidance_found"
    FORCED = "forced"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class AvoidanceResult:
    status: AvoidanceStatus
    coloring: Optional[Coloring] = None
    nodes: int = 0
    backtracks: int = 0


def _is_avoiding(colors: Sequence[int], index_sets) -> bool:
    for idxs in index_sets:
        first = colors[idxs[0]]
        if all(colors[i] == first for i in idxs[1:]):
            return False
    return True


def avoidance_backtrack(inst: AvoidanceInstance, budget: Optional[int] = None) -> AvoidanceResult:
    """Search for an avoidance coloring; each color assignment costs one
    node against the budget (None = unlimited)."""
    window, r = inst.window, inst.r
    members = sorted({i for idxs in inst.index_sets for i in idxs})
    weight = dict.fromkeys(members, 0)
    for idxs in inst.index_sets:
        for i in idxs:
            weight[i] += 1
    order = sorted(members, key=lambda i: (-weight[i], i))
    slot_of = {i: k for k, i in enumerate(order)}
    cands = [tuple(slot_of[i] for i in idxs) for idxs in inst.index_sets]
    member_cands = [[] for _ in order]
    for ci, c in enumerate(cands):
        for s in c:
            member_cands[s].append(ci)

    total = len(order)
    if total == 0:
        coloring = Coloring(window, r, (1,) * len(window))
        return AvoidanceResult(AvoidanceStatus.FOUND, coloring)

    colors = [0] * total
    nodes = 0
    backtracks = 0

    def blocked(slot: int, c: int) -> bool:
        # would assigning c complete a monochromatic candidate?
        for ci in member_cands[slot]:
            if all(colors[s] == c for s in cands[ci] if s != slot):
                return True
        return False

    k = 0
    trial = [0] * total
    while True:
        c = trial[k] + 1
        while c <= r and blocked(k, c):
            c += 1
        if c > r:
            trial[k] = 0
            colors[k] = 0
            k -= 1
            backtracks += 1
            if k < 0:
                return AvoidanceResult(AvoidanceStatus.FORCED, None, nodes, backtracks)
            continue
        if budget is not None and nodes >= budget:
            return AvoidanceResult(AvoidanceStatus.TIMEOUT, None, nodes, backtracks)
        nodes += 1
        trial[k] = c
        colors[k] = c
        if k == total - 1:
            full = [1] * len(window)
            for i, slot in slot_of.items():
                full[i] = colors[slot]
            if not _is_avoiding(full, inst.index_sets):
                raise RuntimeError("backtracker guard tripped: completed coloring not avoiding")
            coloring = Coloring(window, r, tuple(full))
            return AvoidanceResult(AvoidanceStatus.FOUND, coloring, nodes, backtracks)
        k += 1


@dataclass(frozen=True)
class MoreiraResult:
    status: str  # "found" | "not_found_within" | "inconclusive"
    n: int  # least forced N; max probed; or the N whose search timed out
    trace: tuple  # (N, AvoidanceStatus) pairs in evaluation order


def moreira_number(r: int, family: PolyFamily, max_n: int,
                   budget: Optional[int] = None,
                   constraints: Optional[ScanConstraints] = None) -> MoreiraResult:
    """Least N <= max_n at which no r-coloring of {1..N} avoids the
    family's instances.  Exponential probe then binary search on the
    monotone Forced boundary (a coloring of {1..N+1} restricts to one of
    {1..N}, so Forced only moves upward)."""
    if family.spec.kind is not RingKind.INTEGERS:
        raise ValueError("least-window thresholds are defined over Z only")
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    trace = []

    def status_at(n: int) -> AvoidanceStatus:
        window = enumerate_window(family.spec, WindowParams(n))
        res = avoidance_backtrack(build_instance(window, r, family, constraints), budget)
        trace.append((n, res.status))
        return res.status

    lo = 0  # largest N known avoidable
    n = 1
    hi = None  # smallest N known forced
    while True:
        st = status_at(n)
        if st is AvoidanceStatus.TIMEOUT:
            return MoreiraResult("inconclusive", n, tuple(trace))
        if st is AvoidanceStatus.FORCED:
            hi = n
            break
        lo = n
        if n == max_n:
            return MoreiraResult("not_found_within", max_n, tuple(trace))
        n = min(2 * n, max_n)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        st = status_at(mid)
        if st is AvoidanceStatus.TIMEOUT:
            return MoreiraResult("inconclusive", mid, tuple(trace))
        if st is AvoidanceStatus.FORCED:
            hi = mid
        else:
            lo = mid
    return MoreiraResult("found", hi, tuple(trace))


# ---------------------------------------------------------------------------
# CNF export / decode


@dataclass(frozen=True)
class CnfDocument:
    num_vars: int
    clauses: tuple  # tuples of signed ints
    mapping: tuple  # (element literal, window index) pairs, in window order


def cnf_var(index: int, color: int, r: int) -> int:
    """Variable for "element #index has color #color" (both 0-based
    inputs; colors 0..r-1)."""
    return index * r + color + 1


def cnf_export(inst: AvoidanceInstance) -> CnfDocument:
    """Propositional encoding of "some r-coloring avoids every candidate":
    per element one at-least-one clause and pairwise at-most-one clauses,
    then per candidate and color the clause "not all of these that color".
    Satisfiable exactly when an avoidance coloring exists."""
    r = inst.r
    n = len(inst.window)
    clauses = []
    for i in range(n):
        clauses.append(tuple(cnf_var(i, c, r) for c in range(r)))
    for i in range(n):
        for c1 in range(r):
            for c2 in range(c1 + 1, r):
                clauses.append((-cnf_var(i, c1, r), -cnf_var(i, c2, r)))
    for idxs in inst.index_sets:
        for c in range(r):
            clauses.append(tuple(-cnf_var(i, c, r) for i in idxs))
    mapping = tuple((format_element(e), i) for i, e in enumerate(inst.window.elements))
    return CnfDocument(n * r, tuple(clauses), mapping)


def to_dimacs(doc: CnfDocument) -> str:
    """Bit-exact serialization: `c map <element-literal> <index>` lines,
    the `p cnf` header, then one `lits 0` line per clause, LF newlines."""
    lines = [f"c map {lit} {idx}" for lit, idx in doc.mapping]
    lines.append(f"p cnf {doc.num_vars} {len(doc.clauses)}")
    for clause in doc.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfDocument:
    mapping = []
    num_vars = None
    expected = None
    lits: list = []
    clauses: list = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 4 and parts[1] == "map":
                mapping.append((parts[2], int(parts[3])))
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line {line!r}")
            num_vars, expected = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(lits))
                lits = []
            else:
                lits.append(lit)
    if lits:
        raise ValueError("unterminated clause at end of input")
    if num_vars is None:
        raise ValueError("missing problem line")
    if expected != len(clauses):
        raise ValueError(f"problem line promises {expected} clauses, found {len(clauses)}")
    return CnfDocument(num_vars, tuple(clauses), tuple(mapping))


def parse_model(text: str) -> list:
    """Signed literals from DIMACS v-lines or one-literal-per-line text;
    zeros are terminators and are dropped."""
    lits = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "cs":
            continue
        if line[0] == "v":
            line = line[1:]
        for tok in line.split():
            lit = int(tok)
            if lit != 0:
                lits.append(lit)
    return lits


def coloring_to_model(coloring: Coloring) -> list:
    """The coloring as a total signed assignment over the CNF variables."""
    r = coloring.r
    model = []
    for i, color in enumerate(coloring.colors):
        for c in range(r):
            var = cnf_var(i, c, r)
            model.append(var if c == color - 1 else -var)
    return model


def dual_engine_check(inst: AvoidanceInstance, budget: Optional[int] = None) -> dict:
    """Run the backtracker and the reference DPLL (through the CNF
    encoding) on one instance.  agree is None when the backtracker timed
    out — the CNF side alone cannot adjudicate a timeout."""
    from .dpll import dpll_sat

    res = avoidance_backtrack(inst, budget)
    doc = cnf_export(inst)
    model = dpll_sat(doc.num_vars, doc.clauses)
    sat = model is not None
    if res.status is AvoidanceStatus.TIMEOUT:
        agree = None
    else:
        agree = (res.status is AvoidanceStatus.FOUND) == sat
    return {
        "backtrack": res.status.value,
        "cnf_sat": sat,
        "agree": agree,
        "nodes": res.nodes,
        "vars": doc.num_vars,
        "clauses": len(doc.clauses),
    }


def cnf_model_decode(model: Sequence[int], inst: AvoidanceInstance) -> Coloring:
    """Rebuild the coloring from a satisfying assignment and validate it
    avoids every candidate (failure there means an encode or solver bug)."""
    r = inst.r
    n = len(inst.window)
    true_vars = set()
    for lit in model:
        if lit == 0 or abs(lit) > n * r:
            raise ValueError(f"literal {lit} out of range")
        if lit > 0:
            true_vars.add(lit)
    colors = []
    for i in range(n):
        chosen = [c for c in range(r) if cnf_var(i, c, r) in true_vars]
        if len(chosen) != 1:
            raise ValueError(
                f"element #{i} carries {len(chosen)} colors; model violates the one-color clauses"
            )
        colors.append(chosen[0] + 1)
    if not _is_avoiding(colors, inst.index_sets):
        raise RuntimeError("decoded coloring leaves a candidate monochromatic: encode/solver bug")
    return Coloring(inst.window, r, tuple(colors))
