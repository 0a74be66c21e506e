"""Exact covering LP for the fractional metric dimension.

The program is ``min sum f(v)`` subject to ``f(R) >= 1`` for every row ``R``
and ``f >= 0``. It is solved through its packing dual

    max sum y_R   s.t.   sum_{R containing v} y_R <= 1 for each v,   y >= 0

whose all-slack basis is feasible, so no phase one is needed. The covering
solution is read off the simplex multipliers of the optimal basis. Every
number is a :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .config import limits
from .errors import CertificateFailure, MalformedLP, SizeLimit
from .graph import Graph
from .resolve import ResolutionSystem, members, minimal_rows, resolution_system

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def format_rational(q: Fraction | int) -> str:
    """Always ``p/q`` in lowest terms, integral values included (``2/1``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"rational {text!r} is not of the form p/q")
    return Fraction(int(num), int(den))


@dataclass(frozen=True, eq=False)
class CoveringLP:
    num_vars: int
    rows: tuple[int, ...]

    def __post_init__(self):
        for r in self.rows:
            if r == 0:
                raise MalformedLP("empty covering row")
            if r >> self.num_vars:
                raise MalformedLP("row references a variable out of range")


@dataclass(eq=False)
class LPSolution:
    value: Fraction
    primal: list[Fraction]
    dual: list[Fraction]
    status: str = "optimal"
    pivots: int = field(default=0, compare=False)


def build_fracdim_lp(sys: ResolutionSystem, reduce: bool = True) -> CoveringLP:
    """One row per distinct R-set; with ``reduce``, superset rows are dropped."""
    rows = [rs for rs, _ in sys.distinct_rsets]
    if reduce:
        rows = minimal_rows(rows)
    if len(rows) > limits.lp_rows:
        raise SizeLimit(f"LP has {len(rows)} rows, cap is {limits.lp_rows}")
    return CoveringLP(sys.n, tuple(rows))


def simplex_solve(lp: CoveringLP, rule: str = "dantzig") -> LPSolution:
    """Revised primal simplex on the packing dual.

    The basis inverse is kept fraction-free as ``adj / det`` with an integer
    matrix and ``det > 0``; each pivot updates it by exact integer division.

    ``rule="dantzig"`` enters the column of largest reduced cost and breaks
    ratio-test ties lexicographically on the rows of ``B^-1``, which cannot
    cycle for any entering rule. ``rule="bland"`` uses least-index entering
    and leaving choices; it also terminates but needs far more pivots on
    these degenerate programs.
    """
    if rule not in ("dantzig", "bland"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    n = lp.num_vars
    m = len(lp.rows)
    if m == 0:
        # no constraint: f = 0 is optimal
        return LPSolution(ZERO, [ZERO] * n, [], "optimal", 0)
    cols = [members(r) for r in lp.rows]

    # columns 0..m-1 are y_R, m..m+n-1 are slacks of the vertex constraints
    basis = [m + i for i in range(n)]
    adj = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    det = 1
    xb = [1] * n  # basic values times det
    pivots = 0

    while True:
        # simplex multipliers times det; only structural basics cost 1
        pi = [0] * n
        for i, var in enumerate(basis):
            if var < m:
                row = adj[i]
                for j in range(n):
                    if row[j]:
                        pi[j] += row[j]

        entering = -1
        if rule == "bland":
            for j in range(m):
                if sum(pi[v] for v in cols[j]) < det:
                    entering = j
                    break
            if entering < 0:
                for i in range(n):
                    if pi[i] < 0:
                        entering = m + i
                        break
        else:
            # reduced costs times det: det - pi.a_j, and -pi_i for slacks
            top = 0
            for j in range(m):
                rc = det - sum(pi[v] for v in cols[j])
                if rc > top:
                    top, entering = rc, j
            for i in range(n):
                if -pi[i] > top:
                    top, entering = -pi[i], m + i
        if entering < 0:
            break

        if entering < m:
            cv = cols[entering]
            w = [sum(adj[i][v] for v in cv) for i in range(n)]
        else:
            k = entering - m
            w = [adj[i][k] for i in range(n)]

        leave = -1
        for i in range(n):
            if w[i] > 0:
                if leave < 0:
                    leave = i
                    continue
                lhs, rhs = xb[i] * w[leave], xb[leave] * w[i]
                if lhs < rhs:
                    leave = i
                elif lhs == rhs:
                    if rule == "bland":
                        if basis[i] < basis[leave]:
                            leave = i
                    elif _lex_less(adj[i], w[i], adj[leave], w[leave]):
                        leave = i
        if leave < 0:
            raise MalformedLP("packing dual unbounded; covering program infeasible")

        wr = w[leave]
        prow = adj[leave]
        xr = xb[leave]
        for i in range(n):
            if i == leave:
                continue
            wi = w[i]
            row = adj[i]
            if wi:
                adj[i] = [(wr * x - wi * y) // det for x, y in zip(row, prow)]
                xb[i] = (wr * xb[i] - wi * xr) // det
            else:
                adj[i] = [wr * x // det for x in row]
                xb[i] = wr * xb[i] // det
        det = wr
        basis[leave] = entering
        pivots += 1

    dual = [ZERO] * m
    for i, var in enumerate(basis):
        if var < m:
            dual[var] = Fraction(xb[i], det)
    primal = [Fraction(p, det) for p in pi]
    value = sum(dual, ZERO)
    return LPSolution(value, primal, dual, "optimal", pivots)


def _lex_less(a: list[int], wa: int, b: list[int], wb: int) -> bool:
    """Row ``a / wa`` lexicographically below ``b / wb`` (``wa, wb > 0``)."""
    for x, y in zip(a, b):
        lhs, rhs = x * wb, y * wa
        if lhs != rhs:
            return lhs < rhs
    return False


def verify_certificate(lp: CoveringLP, sol: LPSolution) -> bool:
    """Independent optimality check: both sides feasible with equal objectives."""
    if sol.status != "optimal":
        return False
    if len(sol.primal) != lp.num_vars or len(sol.dual) != len(lp.rows):
        return False
    f = [Fraction(x) for x in sol.primal]
    y = [Fraction(x) for x in sol.dual]
    if any(x < 0 or x > 1 for x in f):
        return False
    for r in lp.rows:
        if sum((f[v] for v in members(r)), ZERO) < 1:
            return False
    if any(x < 0 for x in y):
        return False
    load = [ZERO] * lp.num_vars
    for r, yr in zip(lp.rows, y):
        if yr:
            for v in members(r):
                load[v] += yr
    if any(x > 1 for x in load):
        return False
    value = Fraction(sol.value)
    return sum(f, ZERO) == value and sum(y, ZERO) == value


def solve_certified(lp: CoveringLP) -> LPSolution:
    sol = simplex_solve(lp)
    if not verify_certificate(lp, sol):
        raise CertificateFailure("simplex output failed the duality certificate")
    return sol


def fracdim_solution(g: Graph, sys: Optional[ResolutionSystem] = None) -> tuple[CoveringLP, LPSolution]:
    if g.n < 2:
        raise ValueError("fractional metric dimension needs at least two vertices")
    sys = sys if sys is not None else resolution_system(g)
    lp = build_fracdim_lp(sys)
    return lp, solve_certified(lp)


def fracdim(g: Graph, sys: Optional[ResolutionSystem] = None) -> Fraction:
    """dim_f(G) as a certified exact rational."""
    return fracdim_solution(g, sys)[1].value
