"""Executable theorem suite.

Each check compares a closed form, bound or characterisation against the
certified LP value and the combinatorial oracles, and records one
:class:`Instance` per comparison. Passing means exact equality (or an exact
inequality holding); nothing here is approximate.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

from . import generators as gen
from .config import limits
from .drg import (
    binomial_neighbour_inequality_holds,
    drg_dim_bound,
    drg_fracdim,
    hamming_pii_sum,
    hamming_sum_inequality_holds,
    is_distance_regular,
    johnson_pii_sum,
    johnson_sum_inequality_holds,
    pii_sum,
)
from .errors import FracdimError, HypothesisNotMet, InvalidParameter, SizeLimit
from .graph import Graph, cartesian_product, distance_matrix, is_connected
from .ratlp import build_fracdim_lp, format_rational, simplex_solve, verify_certificate
from .resolve import (
    check_lemma_3_1,
    check_lemma_3_3,
    find_twins,
    metric_dimension,
    r_min,
    resolution_system,
)
from .symmetry import is_vertex_transitive

FAMILIES = ("path", "complete", "cycle", "hypercube", "hamming", "johnson", "k2_cycle")


@dataclass
class Instance:
    description: str
    expected: Any
    observed: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "instance": self.description,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "pass": self.passed,
        }


@dataclass
class TheoremReport:
    theorem_id: str
    instances: list[Instance] = field(default_factory=list)
    elapsed: float = 0.0
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    def expect(self, description: str, expected, observed) -> bool:
        ok = expected == observed and type(expected) is type(observed) or (
            isinstance(expected, (Fraction, int))
            and not isinstance(expected, bool)
            and isinstance(observed, (Fraction, int))
            and not isinstance(observed, bool)
            and Fraction(expected) == Fraction(observed)
        )
        self.instances.append(Instance(description, expected, observed, bool(ok)))
        return bool(ok)

    def claim(self, description: str, holds: bool) -> bool:
        return self.expect(description, True, bool(holds))

    def extend(self, other: "TheoremReport") -> None:
        self.instances.extend(other.instances)
        self.elapsed += other.elapsed

    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.passed]

    def to_dict(self) -> dict:
        out = {"theorem_id": self.theorem_id}
        if self.seed is not None:
            out["seed"] = self.seed
        out["instances"] = [i.to_dict() for i in self.instances]
        out["pass"] = self.passed
        return out


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


class _timed:
    def __init__(self, report: TheoremReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed += time.perf_counter() - self.t0
        return False


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# --- LP oracle -------------------------------------------------------------


def lp_value(g: Graph, report: Optional[TheoremReport] = None, sys=None) -> Fraction:
    """Certified dim_f; the certificate outcome is recorded when a report is given."""
    sys = sys if sys is not None else resolution_system(g)
    lp = build_fracdim_lp(sys)
    sol = simplex_solve(lp)
    ok = verify_certificate(lp, sol)
    if report is not None:
        report.claim(f"{g.name}: LP certificate", ok)
    if not ok:
        raise FracdimError(f"LP certificate failed on {g.name}")
    return sol.value


# --- structural family tests ----------------------------------------------


def is_path_graph(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and max(g.degrees(), default=0) <= 2 and is_connected(g)


def is_complete_graph(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_odd_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3 and g.n % 2 == 1 and g.num_edges == g.n
        and all(d == 2 for d in g.degrees()) and is_connected(g)
    )


def in_equality_family(g: Graph) -> bool:
    return is_path_graph(g) or is_complete_graph(g) or is_odd_cycle_graph(g)


# --- closed forms ----------------------------------------------------------


def canonical_johnson(n: int, k: int) -> tuple[int, int]:
    return n, min(k, n - k)


def closed_form(family: str, *params: int) -> Fraction:
    """Known dim_f of a named family."""
    try:
        if family == "path":
            (n,) = params
            if n < 2:
                raise InvalidParameter("path needs n >= 2")
            return Fraction(1)
        if family == "complete":
            (n,) = params
            if n < 2:
                raise InvalidParameter("complete graph needs n >= 2")
            return Fraction(n, 2)
        if family == "cycle":
            (n,) = params
            if n < 3:
                raise InvalidParameter("cycle needs n >= 3")
            return Fraction(n, n - 1) if n % 2 else Fraction(n, n - 2)
        if family == "hypercube":
            (n,) = params
            if n < 1:
                raise InvalidParameter("hypercube needs n >= 1")
            return Fraction(1) if n == 1 else Fraction(2)
        if family == "hamming":
            n, k = params
            if n < 1 or k < 2:
                raise InvalidParameter("hamming needs n >= 1, k >= 2")
            if k == 2:
                return closed_form("hypercube", n)
            return Fraction(k, 2)
        if family == "johnson":
            n, k = params
            if not 1 <= k <= n - 1:
                raise InvalidParameter("johnson needs 1 <= k <= n-1")
            n, k = canonical_johnson(n, k)
            if k == 1:
                return Fraction(n, 2)
            if (n, k) == (4, 2):
                return Fraction(3)
            if (n, k) == (8, 4):
                return Fraction(35, 17)
            return Fraction(n * n - n, 2 * k * n - 2 * k * k)
        if family == "k2_cycle":
            (n,) = params
            if n < 3:
                raise InvalidParameter("k2_cycle needs n >= 3")
            return Fraction(2 * n, n + 1) if n % 2 else Fraction(2)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InvalidParameter):
            raise
        raise InvalidParameter(f"bad parameters {params!r} for {family}") from None
    raise InvalidParameter(f"unknown family {family!r}")


def build_family(family: str, *params: int) -> Graph:
    if family == "path":
        return gen.path(*params)
    if family == "complete":
        return gen.complete(*params)
    if family == "cycle":
        return gen.cycle(*params)
    if family == "hypercube":
        return gen.hypercube(*params)
    if family == "hamming":
        return gen.hamming(*params)
    if family == "johnson":
        return gen.johnson(*params)
    if family == "k2_cycle":
        (n,) = params
        return cartesian_product(gen.complete(2), gen.cycle(n)).relabel(f"K2xC{n}")
    raise InvalidParameter(f"unknown family {family!r}")


DEFAULT_RANGES: dict[str, list[tuple[int, ...]]] = {
    "path": [(n,) for n in range(2, 11)],
    "complete": [(n,) for n in range(2, 11)],
    "cycle": [(n,) for n in range(3, 16)],
    "hypercube": [(n,) for n in range(1, 5)],
    "hamming": [(1, k) for k in range(3, 9)] + [(2, k) for k in range(3, 9)] + [(3, 3), (4, 3)],
    "johnson": [(4, 2), (5, 2), (6, 2), (6, 3), (7, 2), (7, 3), (8, 4)],
    "k2_cycle": [(n,) for n in range(3, 16)],
}


def _family_instance(args: tuple) -> TheoremReport:
    family, params = args
    label = f"{family}{tuple(params)}"
    rep = TheoremReport(f"family:{label}")
    try:
        g = build_family(family, *params)
        dm = distance_matrix(g)
        sys = resolution_system(g, dm)
        value = lp_value(g, rep, sys)
        rep.expect(f"{label}: closed form = LP", closed_form(family, *params), value)
        vt = g.n <= limits.vt_n and is_vertex_transitive(g, dm)
        if vt:
            r, _ = r_min(g, sys)
            rep.expect(f"{label}: |V|/r(G) = LP", Fraction(g.n, r), value)
            table = is_distance_regular(g, dm)
            if table is not None:
                rep.expect(f"{label}: DRG formula = LP", drg_fracdim(table, g.n), value)
                if family == "hamming":
                    n, k = params
                    for h in range(1, table.diameter + 1):
                        rep.expect(f"{label}: h={h} equidistant sum vs Hamming formula",
                                   hamming_pii_sum(n, k, h), pii_sum(table, h))
                elif family == "johnson":
                    n, k = canonical_johnson(*params)
                    for h in range(1, table.diameter + 1):
                        rep.expect(f"{label}: h={h} equidistant sum vs Johnson formula",
                                   johnson_pii_sum(n, k, h), pii_sum(table, h))
    except SizeLimit as exc:
        rep.expect(f"{label}: skipped (size limit)", "computed", f"size_limit: {exc.detail}")
    return rep


def verify_family(family: str, param_range: Optional[Iterable[tuple[int, ...]]] = None, jobs: int = 1) -> TheoremReport:
    """closed form = LP = |V|/r (when VT) = DRG formula (when DRG and VT)."""
    if family not in FAMILIES:
        raise InvalidParameter(f"unknown family {family!r}")
    params = list(param_range) if param_range is not None else DEFAULT_RANGES[family]
    report = TheoremReport(f"family-{family}")
    t0 = time.perf_counter()
    for sub in _map(_family_instance, [(family, tuple(p)) for p in params], jobs):
        report.extend(sub)
    report.elapsed = time.perf_counter() - t0
    return report


def verify_johnson_maximiser(n: int, k: int) -> TheoremReport:
    """Which h maximises the Johnson equidistant sum, against the stored table."""
    n, k = canonical_johnson(n, k)
    report = TheoremReport("johnson-maximiser")
    sums = [johnson_pii_sum(n, k, h) for h in range(1, k + 1)]
    top = max(sums)
    exceptional = (n, k) in {(4, 2), (8, 4)}
    report.expect(f"J({n},{k}): h=1 attains the maximum", not exceptional, sums[0] == top)
    return report


def verify_r_case_table_k2cn(n: int) -> TheoremReport:
    """Every pair of K2 box C_n has the |R| predicted by its case (n odd)."""
    if n < 3 or n % 2 == 0:
        raise InvalidParameter(f"the case table needs odd n >= 3, got {n}")
    report = TheoremReport("thm-2.3-cases")
    with _timed(report):
        g = build_family("k2_cycle", n)
        sys = resolution_system(g)
        cyc = distance_matrix(gen.cycle(n))
        for (a, b), rs in zip(sys.pairs, sys.rsets):
            u1, v1 = divmod(a, n)
            u2, v2 = divmod(b, n)
            if u1 == u2:
                case, want = "same K2 side", 2 * n - 2
            elif v1 == v2:
                case, want = "same cycle position", 2 * n
            elif cyc.dist(v1, v2) == 1:
                case, want = "opposite sides, cycle-adjacent", n + 1
            else:
                case, want = "opposite sides, cycle distance >= 2", 2 * n - 2
            report.expect(f"n={n} pair ({u1}{v1},{u2}{v2}) [{case}]", want, rs.bit_count())
        r, _ = r_min(g, sys)
        report.expect(f"n={n}: r(K2 x C{n}) = n+1", n + 1, r)
    return report


def verify_thm_3_4(g: Graph, value: Optional[Fraction] = None, dim: Optional[int] = None, sys=None) -> TheoremReport:
    """dim_f >= n / (n - dim + 1), with equality exactly on paths, complete
    graphs and odd cycles."""
    report = TheoremReport("thm-3.4")
    with _timed(report):
        sys = sys if sys is not None else resolution_system(g)
        if value is None:
            value = lp_value(g, report, sys)
        if dim is None:
            dim, _ = metric_dimension(g, sys)
        bound = Fraction(g.n, g.n - dim + 1)
        name = g.name or f"graph(n={g.n})"
        report.claim(f"{name}: dim_f={format_rational(value)} >= {format_rational(bound)}", value >= bound)
        report.expect(f"{name}: equality iff path/complete/odd cycle", in_equality_family(g), value == bound)
    return report


def verify_drg_dim_bound(g: Graph) -> TheoremReport:
    """dim <= max_h sum p^h_{i,i} + 1, tight exactly on complete graphs and odd cycles."""
    report = TheoremReport("cor-drg-dim")
    with _timed(report):
        table = is_distance_regular(g)
        if table is None:
            raise HypothesisNotMet(f"{g.name} is not distance-regular")
        bound = drg_dim_bound(table, g.n)
        dim, _ = metric_dimension(g)
        report.claim(f"{g.name}: dim={dim} <= {bound}", dim <= bound)
        report.expect(f"{g.name}: tight iff complete or odd cycle",
                      is_complete_graph(g) or is_odd_cycle_graph(g), dim == bound)
    return report


def verify_product_bounds(g: Graph, h: Graph, values: Optional[tuple] = None) -> TheoremReport:
    """max(dim_f G, dim_f H) <= dim_f(G x H) <= min over orderings of max(dim_f(first), |V(second)|)."""
    report = TheoremReport("thm-4.1-4.2")
    with _timed(report):
        gh = cartesian_product(g, h)
        if values is None:
            fg, fh = lp_value(g, report), lp_value(h, report)
        else:
            fg, fh = values
        fp = lp_value(gh, report)
        lower = max(fg, fh)
        upper = min(max(fg, Fraction(h.n)), max(fh, Fraction(g.n)))
        name = f"{g.name} x {h.name}"
        report.claim(f"{name}: dim_f={format_rational(fp)} >= {format_rational(lower)}", fp >= lower)
        report.claim(f"{name}: dim_f={format_rational(fp)} <= {format_rational(upper)}", fp <= upper)
    return report


def product_bound_is_tight(g: Graph, h: Graph) -> TheoremReport:
    """dim_f(G x H) equals max(dim_f(G), |V(H)|)."""
    report = TheoremReport("thm-4.2-tight")
    fg = lp_value(g, report)
    fp = lp_value(cartesian_product(g, h), report)
    report.expect(f"{g.name} x {h.name}: meets max(dim_f(G), |V(H)|)", max(fg, Fraction(h.n)), fp)
    return report


def s_v_sets(dg, dh, u1: int, v1: int, u2: int, v2: int) -> list[set[int]]:
    """For each v in H, the u in G with d(u1,u) - d(u2,u) != d(v2,v) - d(v1,v)."""
    ng, nh = len(dg), len(dh)
    out = []
    for v in range(nh):
        kv = dh[v2][v] - dh[v1][v]
        out.append({u for u in range(ng) if dg[u1][u] - dg[u2][u] != kv})
    return out


def verify_thm_4_3(g: Graph, h: Graph) -> TheoremReport:
    """dim_f(G x H) = |V(G)|/2 when dim_f(G) = |V(G)|/2, |V(G)| >= 3, |V(H)| <= |V(G)|."""
    report = TheoremReport("thm-4.3")
    with _timed(report):
        name = f"{g.name} x {h.name}"
        if g.n < 3 or h.n > g.n:
            raise HypothesisNotMet(f"{name}: need |V(G)| >= 3 and |V(H)| <= |V(G)|")
        half = Fraction(g.n, 2)
        fg = lp_value(g, report)
        if fg != half:
            raise HypothesisNotMet(f"{name}: dim_f(G) = {format_rational(fg)}, not |V(G)|/2")
        report.expect(f"{g.name}: dim_f(G) = |V(G)|/2", half, fg)

        dmg = distance_matrix(g)
        twins = find_twins(dmg)
        has_twin = set()
        for a, b in twins:
            has_twin.update((a, b))
        report.claim(f"{g.name}: every vertex has a distance twin", len(has_twin) == g.n)

        gh = cartesian_product(g, h)
        sys = resolution_system(gh)
        fp = lp_value(gh, report, sys)
        report.expect(f"{name}: dim_f(G x H) = |V(G)|/2", half, fp)

        dg = dmg.rows()
        dh = distance_matrix(h).rows()
        m = h.n
        short = 0
        decomposition_ok = True
        small_sv = 0
        for (a, b), rs in zip(sys.pairs, sys.rsets):
            if rs.bit_count() < 2 * m:
                short += 1
            u1, v1 = divmod(a, m)
            u2, v2 = divmod(b, m)
            if u1 == u2:
                continue
            svs = s_v_sets(dg, dh, u1, v1, u2, v2)
            rebuilt = 0
            for v, sv in enumerate(svs):
                if len(sv) < 2:
                    small_sv += 1
                for u in sv:
                    rebuilt |= 1 << (u * m + v)
            if rebuilt != rs:
                decomposition_ok = False
        report.expect(f"{name}: pairs with |R| < 2|V(H)|", 0, short)
        report.claim(f"{name}: R-set equals the union of S_v layers", decomposition_ok)
        report.expect(f"{name}: layers with |S_v| < 2", 0, small_sv)
    return report


# --- exhaustive small-graph sweep -----------------------------------------


def enumerate_connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on ``0..n-1``, by ascending edge bitmask over
    the lexicographic pair list."""
    if n > limits.sweep_n:
        raise SizeLimit(f"labeled enumeration capped at n={limits.sweep_n}, got {n}")
    if n < 1:
        raise InvalidParameter("n must be positive")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges, f"G{n}#{mask}")
        if is_connected(g):
            yield g


def _sweep_graph(g: Graph) -> dict:
    """All sweep checks for one graph; returns plain data for cheap pickling."""
    sys = resolution_system(g)
    lp = build_fracdim_lp(sys)
    sol = simplex_solve(lp)
    cert = verify_certificate(lp, sol)
    value = sol.value
    r, _ = r_min(g, sys)
    dim, _ = metric_dimension(g, sys)
    n = g.n
    bound = Fraction(n, n - dim + 1)
    hyp, is_k4 = check_lemma_3_3(g, sys)
    return {
        "name": g.name,
        "cert": cert,
        "lemma_2_1": value <= Fraction(n, r),
        "thm_3_4_ineq": value >= bound,
        "thm_3_4_eq": (value == bound) == in_equality_family(g),
        "is_eq": value == bound,
        # r >= 2 always, so the characterisation only speaks for n >= 3
        "lemma_3_2": n < 3 or (r == n - 1) == (is_path_graph(g) or is_odd_cycle_graph(g)),
        "lemma_3_1": check_lemma_3_1(g, sys, dim),
        "envelope": 1 <= value <= Fraction(n, 2),
        "lemma_3_3": (not hyp) or is_k4,
        "lemma_3_3_hyp": hyp,
    }


_SWEEP_CHECKS = [
    ("cert", "lp-certificate"),
    ("lemma_2_1", "lemma-2.1"),
    ("thm_3_4_ineq", "thm-3.4-inequality"),
    ("thm_3_4_eq", "thm-3.4-equality"),
    ("lemma_3_2", "lemma-3.2"),
    ("lemma_3_1", "lemma-3.1"),
    ("envelope", "envelope"),
    ("lemma_3_3", "lemma-3.3"),
]


def exhaustive_small_graph_sweep(max_n: int, jobs: int = 1) -> list[TheoremReport]:
    """Every labeled connected graph on 2..max_n vertices against the
    universally quantified claims. Returns one report per claim; an instance
    is one vertex count, listing failing graphs by name if any."""
    if max_n > limits.sweep_n:
        raise SizeLimit(f"sweep capped at max_n={limits.sweep_n}, got {max_n}")
    reports = {key: TheoremReport(tid) for key, tid in _SWEEP_CHECKS}
    census = TheoremReport("sweep-census")
    t0 = time.perf_counter()
    for n in range(2, max_n + 1):
        rows = _map(_sweep_graph, list(enumerate_connected_labeled_graphs(n)), jobs)
        for key, _ in _SWEEP_CHECKS:
            bad = [row["name"] for row in rows if not row[key]]
            reports[key].expect(f"n={n}: {len(rows)} graphs, failures", [], bad)
        equality = sum(1 for row in rows if row["is_eq"])
        census.instances.append(Instance(f"n={n}: labeled connected graphs", None, len(rows), True))
        census.instances.append(Instance(f"n={n}: graphs meeting the dim bound with equality", None, equality, True))
        hyp = [row["name"] for row in rows if row["lemma_3_3_hyp"]]
        census.instances.append(Instance(f"n={n}: graphs satisfying the K4 lemma hypothesis", None, hyp, True))
    elapsed = time.perf_counter() - t0
    out = [reports[key] for key, _ in _SWEEP_CHECKS] + [census]
    for rep in out:
        rep.elapsed = elapsed / len(out)
    return out


# --- proof-step inequalities -------------------------------------------------


def verify_proof_inequalities(hamming_max_n: int = 8, hamming_max_k: int = 8, johnson_max_n: int = 20,
                              binomial_max_m: int = 30) -> TheoremReport:
    report = TheoremReport("proof-inequalities")
    with _timed(report):
        bad = [(n, k) for n in range(1, hamming_max_n + 1) for k in range(3, hamming_max_k + 1)
               if not hamming_sum_inequality_holds(n, k)]
        report.expect(f"Hamming sums at h>=2 bounded by (k-2)k^(n-1), n<={hamming_max_n}, 3<=k<={hamming_max_k}", [], bad)
        bad = [(n, k) for n in range(4, johnson_max_n + 1) for k in range(2, n // 2 + 1)
               if (n, k) not in {(4, 2), (8, 4)} and not johnson_sum_inequality_holds(n, k)]
        report.expect(f"Johnson sums at 2<=h<=k bounded by the h=1 sum, n<={johnson_max_n}", [], bad)
        exceptional = [(n, k) for n, k in [(4, 2), (8, 4)] if johnson_sum_inequality_holds(n, k)]
        report.expect("Johnson bound fails at the two exceptional parameters", [], exceptional)
        bad = [(m, k) for m in range(1, binomial_max_m + 1) for k in range(0, m + 1)
               if not binomial_neighbour_inequality_holds(m, k)]
        report.expect(f"C(m,k+1)+C(m,k-1) >= C(m,k), 1<=m<={binomial_max_m}", [], bad)
    return report


# --- random factor corpus -------------------------------------------------


def random_connected_graph(rng: random.Random, n: int, name: str) -> Graph:
    """Erdos-Renyi G(n, p) with p drawn uniformly from [0.2, 0.9], resampled until connected."""
    p = rng.uniform(0.2, 0.9)
    while True:
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges, name)
        if is_connected(g):
            return g


def random_factor_pairs(count: int, seed: int, max_order: int = 48) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        a = rng.randint(2, max_order // 2)
        b = rng.randint(2, max_order // a)
        out.append((random_connected_graph(rng, a, f"R{i}a(n={a})"),
                    random_connected_graph(rng, b, f"R{i}b(n={b})")))
    return out


def named_tight_pairs() -> list[tuple[Graph, Graph]]:
    pairs = [(gen.path(n), gen.complete(2)) for n in range(2, 9)]
    pairs += [(gen.cycle(2 * n), gen.complete(2)) for n in range(2, 9)]
    return pairs


def _product_instance(pair) -> TheoremReport:
    return verify_product_bounds(*pair)


def verify_product_corpus(count: int = 200, seed: int = 0, max_order: int = 48, jobs: int = 1) -> list[TheoremReport]:
    bounds = TheoremReport("thm-4.1-4.2", seed=seed)
    tight = TheoremReport("thm-4.2-tight")
    t0 = time.perf_counter()
    pairs = random_factor_pairs(count, seed, max_order) + named_tight_pairs()
    for sub in _map(_product_instance, pairs, jobs):
        bounds.extend(sub)
    for g, h in named_tight_pairs():
        tight.extend(product_bound_is_tight(g, h))
    bounds.elapsed = time.perf_counter() - t0
    return [bounds, tight]


THM_4_3_PAIRS = [("K4", "P3"), ("K4", "C4"), ("K3", "K3"), ("K5", "P5"), ("K6", "C6")]


def _named(token: str) -> Graph:
    kind, n = token[0], int(token[1:])
    return {"K": gen.complete, "P": gen.path, "C": gen.cycle}[kind](n)


# --- suites ------------------------------------------------------------------


def run_families(jobs: int = 1) -> list[TheoremReport]:
    reports = [verify_family(f, jobs=jobs) for f in FAMILIES]
    cases = TheoremReport("thm-2.3-cases")
    for n in (3, 5, 7):
        cases.extend(verify_r_case_table_k2cn(n))
    reports.append(cases)
    maxim = TheoremReport("johnson-maximiser")
    for n in range(4, 21):
        for k in range(2, n // 2 + 1):
            maxim.extend(verify_johnson_maximiser(n, k))
    reports.append(maxim)
    reports.append(verify_proof_inequalities())
    cor = TheoremReport("cor-drg-dim")
    for g in [gen.complete(n) for n in range(2, 8)] + [gen.cycle(n) for n in range(3, 12)] + [
        gen.hypercube(3), gen.hamming(2, 3), gen.johnson(5, 2), gen.johnson(6, 2), gen.hamming(2, 4)
    ]:
        cor.extend(verify_drg_dim_bound(g))
    reports.append(cor)
    return reports


def run_products(seed: int = 0, count: int = 200, jobs: int = 1) -> list[TheoremReport]:
    reports = verify_product_corpus(count, seed, jobs=jobs)
    t43 = TheoremReport("thm-4.3")
    for a, b in THM_4_3_PAIRS:
        t43.extend(verify_thm_4_3(_named(a), _named(b)))
    reports.append(t43)
    return reports


def run_suite(suite: str, max_n: int = 5, seed: int = 0, jobs: int = 1, count: int = 200) -> dict:
    """Run a named suite; returns ``{"suite", "seed", "results", "all_pass", "timing"}``."""
    if suite not in ("families", "small-sweep", "products", "all"):
        raise InvalidParameter(f"unknown suite {suite!r}")
    reports: list[TheoremReport] = []
    if suite in ("families", "all"):
        reports += run_families(jobs)
    if suite in ("small-sweep", "all"):
        reports += exhaustive_small_graph_sweep(max_n, jobs)
    if suite in ("products", "all"):
        reports += run_products(seed, count, jobs)
    return {
        "suite": suite,
        "seed": seed,
        "results": [r.to_dict() for r in reports],
        "all_pass": all(r.passed for r in reports),
        "timing": {r.theorem_id: round(r.elapsed, 3) for r in reports},
    }
