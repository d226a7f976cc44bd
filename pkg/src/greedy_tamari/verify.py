"""Desk-scale verification suites.

Each suite returns a :class:`~greedy_tamari.closedform.Report` (or an
:class:`~greedy_tamari.identities.IdentityReport` for the polynomial identities).  For
structural checks the entry's ``lhs`` is the number of instances that
satisfy the property and ``rhs`` the number examined.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from . import closedform as cf
from .closedform import CheckEntry, Report
from .identities import IdentityReport, verify_lemmaA1, verify_propA2
from .paths import (
    DyckWord,
    delete_last_peak,
    embed_unit_steps,
    enumerate_paths,
    factorize,
    is_generator,
    star,
    star_fold,
    stats,
)
from .poly import ONE, X, ZERO, SparsePoly
from .posets import (
    CoverGraph,
    build_poset,
    classify,
    covers,
    greedy_covers,
    interval_factorize,
    interval_star,
    intervals,
    labelled_weight,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .series import (
    TSeries,
    solve_constellations,
    solve_contacts,
    solve_greedy,
    solve_greedy_q,
    solve_greedy_system,
    solve_ordinary_system,
)

# desk-scale defaults: m -> largest n
COUNT_GRID = {1: 8, 2: 6, 3: 4}
LABELLED_GRID = {1: 6, 2: 4}
STRUCTURE_GRID = {1: 5, 2: 5}


def _grid(default: Dict[int, int], m: int | None, n_max: int | None,
          n: int | None = None) -> List[Tuple[int, List[int]]]:
    if m is None:
        items = sorted(default.items())
    else:
        items = [(m, n_max if n_max is not None else default.get(m, 4))]
    if n is not None:
        return [(mm, [n]) for mm, _ in items]
    return [(mm, list(range(1, top + 1))) for mm, top in items]


class _Tally:
    """Accumulates (passing, examined) counts per property name."""

    def __init__(self):
        self.ok: Counter = Counter()
        self.seen: Counter = Counter()

    def check(self, key: str, cond: bool) -> None:
        self.seen[key] += 1
        if cond:
            self.ok[key] += 1

    def entries(self, n: int) -> List[CheckEntry]:
        return [CheckEntry(n, key, self.ok[key], self.seen[key]) for key in self.seen]


# -- counts -------------------------------------------------------------------

def verify_counts(flavor: str, m: int | None = None, n_max: int | None = None,
                  n: int | None = None) -> List[Report]:
    formula = cf.greedy_count if flavor == "greedy" else cf.ordinary_count
    reports = []
    for mm, ns in _grid(COUNT_GRID, m, n_max, n):
        rep = Report(mm)
        for k in ns:
            brute = build_poset(mm, k, flavor).interval_count()
            rep.checks.append(CheckEntry(k, f"{flavor} intervals", brute, formula(mm, k)))
        reports.append(rep)
    return reports


def verify_labelled(m: int | None = None, n_max: int | None = None,
                    n: int | None = None) -> List[Report]:
    reports = []
    for mm, ns in _grid(LABELLED_GRID, m, n_max, n):
        rep = Report(mm)
        for k in ns:
            g = build_poset(mm, k, "ordinary")
            weights = [labelled_weight(w) for w in g.nodes]
            total = sum(weights[b] for a in range(len(g)) for b in _bits(g.upsets[a]))
            rep.checks.append(CheckEntry(k, "labelled ordinary intervals", total,
                                         cf.labelled_ordinary_count(mm, k)))
        reports.append(rep)
    return reports


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- series versus enumeration ---------------------------------------------------

EQUATIONS = ("greedy", "greedy-system", "ordinary", "ordinary-system", "contacts",
             "contacts-greedy", "constellation", "greedy-q")


def enumeration_series(equation: str, m: int, N: int) -> List[TSeries]:
    """Generating series built directly from poset enumeration, sizes < N.

    The shapes mirror the solvers: ``greedy`` gives ``[I]`` with x marking
    the final descent of the top path, ``*-system`` gives ``[J_0, ...,
    J_{m+1}]``, ``contacts`` gives ``[T]`` with the constant term ``x`` and
    ``x^{contacts + 2}`` per interval, ``contacts-greedy`` counts greedy
    intervals by contacts of the bottom path, ``constellation`` gives
    ``[1 + (first-ascent series)]`` and ``greedy-q`` adds ``q^{chain}``.
    """
    flavor = "ordinary" if equation in ("ordinary", "ordinary-system", "contacts") else "greedy"
    levels = m + 2 if equation.endswith("system") else 1
    coeffs = [[ZERO] * N for _ in range(levels)]
    if equation == "contacts":
        coeffs[0][0] = X
    if equation == "constellation":
        coeffs[0][0] = ONE
    for n in range(1, N):
        g = build_poset(m, n, flavor)
        acc: List[Counter] = [Counter() for _ in range(levels)]
        for rec in intervals(g, with_chain=equation == "greedy-q"):
            if equation.endswith("system"):
                j, _ = classify(rec.lower)
                for i in range(j, m + 2):
                    acc[i][(rec.d_upper, 0)] += 1
            elif equation in ("greedy", "ordinary"):
                acc[0][(rec.d_upper, 0)] += 1
            elif equation == "contacts":
                acc[0][(rec.contacts_lower + 2, 0)] += 1
            elif equation == "contacts-greedy":
                acc[0][(rec.contacts_lower, 0)] += 1
            elif equation == "constellation":
                acc[0][(rec.first_ascent_upper, 0)] += 1
            elif equation == "greedy-q":
                acc[0][(rec.d_upper, rec.chain_length)] += 1
            else:
                raise ValueError(f"unknown equation {equation!r}")
        for i in range(levels):
            coeffs[i][n] = SparsePoly({(d, q, 0, 0): c for (d, q), c in acc[i].items()})
    return [TSeries(c, N) for c in coeffs]


def solver_series(equation: str, m: int, N: int) -> List[TSeries]:
    if equation == "greedy":
        return [solve_greedy(m, N)]
    if equation == "greedy-system":
        return solve_greedy_system(m, N)
    if equation == "ordinary":
        return [solve_ordinary_system(m, N)[-1]]
    if equation == "ordinary-system":
        return solve_ordinary_system(m, N)
    if equation == "contacts":
        return [solve_contacts(m, N)]
    if equation == "constellation":
        return [solve_constellations(m, N)]
    if equation == "greedy-q":
        return [solve_greedy_q(m, N)]
    raise ValueError(f"no solver for {equation!r}")


def verify_series(equation: str, m: int, n_max: int) -> Report:
    """Coefficientwise comparison of a solver with enumeration, sizes 1..n_max."""
    N = n_max + 1
    solved = solver_series(equation, m, N)
    counted = enumeration_series(equation, m, N)
    rep = Report(m)
    for level, (s, c) in enumerate(zip(solved, counted)):
        for n in range(1, N):
            key = f"{equation}[{level}] t^{n}" if len(solved) > 1 else f"{equation} t^{n}"
            same = s[n] == c[n]
            # exact polynomial comparison; lhs/rhs carry the total counts
            rep.checks.append(CheckEntry(n, key + ("" if same else " (coefficients differ)"),
                                         _total(c[n]), _total(s[n]) if same else -1))
    return rep


def _total(p: SparsePoly) -> int:
    return int(sum(p.coefficients()))


# -- parametric forms ---------------------------------------------------------------

def verify_greedy_parametric(m_values: Iterable[int] = (1, 2, 3), N: int = 12,
                     invariant_order: int = 20) -> List[Report]:
    reports = []
    for m in m_values:
        rep = Report(m)
        pair = cf.solve_param_greedy(m, max(N, invariant_order))
        for name, ok in cf.check_param_invariants(pair).items():
            rep.checks.append(CheckEntry(invariant_order, f"param {name}", int(ok), 1))
        small = cf.ParamPair(pair.Z.truncate(N), pair.U.truncate(N), "greedy", m)
        par = cf.eval_theorem41(m, N, small)
        engine = solve_greedy_system(m, N)
        rep.checks.append(CheckEntry(N, "x^2 I parametric = engine",
                                     int(par.hat_I == engine[-1].shift("x", 2)), 1))
        rep.checks.append(CheckEntry(N, "x^2 I sum form = (x-1)/(U-1) form", int(par.forms_agree), 1))
        for i in range(m + 2):
            rep.checks.append(CheckEntry(N, f"J_{i} parametric = engine",
                                         int(par.J[i] == engine[i].shift("x", 2)), 1))
        for n in range(1, N):
            rep.checks.append(CheckEntry(n, "I(1) coefficient vs count formula",
                                         int(par.I_at_1[n].constant_value()), cf.greedy_count(m, n)))
        reports.append(rep)
    return reports


def verify_ordinary_parametric(m_values: Iterable[int] = (1, 2), N: int = 10,
                     invariant_order: int = 20) -> List[Report]:
    reports = []
    for m in m_values:
        rep = Report(m)
        pair = cf.solve_param_ordinary(m, max(N, invariant_order))
        for name, ok in cf.check_param_invariants(pair).items():
            rep.checks.append(CheckEntry(invariant_order, f"param {name}", int(ok), 1))
        small = cf.ParamPair(pair.Z.truncate(N), pair.U.truncate(N), "ordinary", m)
        par = cf.eval_theorem54(m, N, small)
        engine = solve_ordinary_system(m, N)
        rep.checks.append(CheckEntry(N, "x^2 Ibar parametric = engine",
                                     int(par.hat_I == engine[-1].shift("x", 2)), 1))
        for i in range(m + 2):
            rep.checks.append(CheckEntry(N, f"Jbar_{i} parametric = engine",
                                         int(par.J[i] == engine[i].shift("x", 2)), 1))
        rep.checks.append(CheckEntry(N, "Jbar_m closed form = grouped form at i=m",
                                     int(par.Jm_closed_matches), 1))
        coeffs = [par.one_plus_I_at_1[n].constant_value() for n in range(N)]
        rep.checks.append(CheckEntry(0, "1 + Ibar(1) constant term", int(coeffs[0]), 1))
        for n in range(1, N):
            rep.checks.append(CheckEntry(n, "1 + Ibar(1) coefficient vs count formula",
                                         int(coeffs[n]), cf.ordinary_count(m, n)))
        reports.append(rep)
    return reports


def verify_identities(m_nabla: int = 4, m_recursion: int = 6, bound: int = 4) -> IdentityReport:
    rep = IdentityReport()
    for m in range(1, m_nabla + 1):
        rep.extend(verify_lemmaA1(m, bound, bound, bound))
    for m in range(1, m_recursion + 1):
        rep.extend(verify_propA2(m))
    return rep


# -- structure --------------------------------------------------------------------------

def _splits(v: DyckWord) -> List[Tuple[DyckWord, DyckWord]]:
    """All ``v = v1 * v2`` with neither factor the unit."""
    gens = factorize(v)
    return [(star_fold(gens[:j]), star_fold(gens[j:])) for j in range(1, len(gens))]


def verify_monoid(m: int, n_max: int) -> Report:
    """Free-monoid factorizations of paths and intervals, cover compatibility."""
    rep = Report(m)
    counts = [1]
    for n in range(1, n_max + 1):
        tally = _Tally()
        paths = enumerate_paths(m, n)
        counts.append(len(paths))
        for w in paths:
            gens = factorize(w)
            tally.check("factorize round-trip", star_fold(gens) == w)
            tally.check("factors are generators",
                        w.is_unit or all(is_generator(g) for g in gens))
            tally.check("degree additivity", sum(g.n - 1 for g in gens) == n - 1)
            for v1, v2 in _splits(w):
                expected = sorted([star(c, v2) for c in greedy_covers(v1)] +
                                  [star(v1, c) for c in greedy_covers(v2)], key=lambda p: p.word)
                tally.check("greedy cover compatibility",
                            sorted(greedy_covers(w), key=lambda p: p.word) == expected
                            and len(set(expected)) == len(expected))
                if stats(v2).is_prime:
                    ord_expected = sorted([star(c, v2) for c in covers(v1, "ordinary")] +
                                          [star(v1, c) for c in covers(v2, "ordinary")],
                                          key=lambda p: p.word)
                    tally.check("ordinary cover compatibility (prime right factor)",
                                sorted(covers(w, "ordinary"), key=lambda p: p.word) == ord_expected
                                and len(set(ord_expected)) == len(ord_expected))
        graphs: Dict[int, CoverGraph] = {k: build_poset(m, k, "greedy") for k in range(1, n + 1)}
        for rec in intervals(graphs[n]):
            factors = interval_factorize(rec.lower, rec.upper)
            tally.check("interval factorization round-trip",
                        _fold_intervals(factors) == (rec.lower, rec.upper))
            tally.check("interval factors are intervals",
                        all(graphs[a.n].leq(a, b) for a, b in factors))
        rep.checks.extend(tally.entries(n))
    # D = 1 + t D^{m+1}, coefficientwise from the counts
    D = TSeries(counts, n_max + 1)
    rhs = 1 + TSeries.t(n_max + 1) * D ** (m + 1)
    for n in range(n_max + 1):
        rep.checks.append(CheckEntry(n, "path count recurrence", counts[n],
                                     int(rhs[n].constant_value())))
    return rep


def _fold_intervals(factors):
    out = factors[0]
    for f in factors[1:]:
        out = interval_star(out, f)
    return out


def verify_bijections(m: int, n_max: int) -> Report:
    """phi/psi round-trips with statistics, their counting identities, and
    peak deletion along covers."""
    rep = Report(m)
    graphs = {n: build_poset(m, n, "greedy") for n in range(1, n_max + 1)}
    # histograms by (size, final descent): I, J_i and K_i
    hist_I = Counter()
    hist_J = [Counter() for _ in range(m + 2)]
    hist_K = [Counter() for _ in range(m + 2)]
    for n, g in graphs.items():
        tally = _Tally()
        for rec in intervals(g):
            v, w = rec.lower, rec.upper
            key = (n, rec.d_upper)
            hist_I[key] += 1
            j, ks = classify(v)
            for i in range(j, m + 2):
                hist_J[i][key] += 1
            for i in ks:
                hist_K[i][key] += 1
            if j >= 1:
                (v1, w1), (v2, w2) = phi(v, w)
                tally.check("phi lands in K_i x I",
                            classify(v1) == (j, frozenset({j})) and graphs[v1.n].leq(v1, w1)
                            and graphs[v2.n].leq(v2, w2))
                tally.check("phi round-trip", phi_inverse((v1, w1), (v2, w2)) == (v, w))
                d1, d2 = stats(w1).final_descent, stats(w2).final_descent
                tally.check("phi size and descent bookkeeping",
                            w.n == w1.n + w2.n - 1 and rec.d_upper == d1 + d2 - m)
            if ks:
                (i,) = ks
                (v1, w1), h = psi(v, w)
                d1 = stats(w1).final_descent
                below = classify(v1)[0] <= i - 1 if not v1.is_empty else True
                ok_base = v1.is_empty or (below and graphs[v1.n].leq(v1, w1))
                tally.check("psi lands in J_{i-1}", ok_base)
                tally.check("psi height range and descent",
                            m + 1 - i <= h <= d1 and rec.d_upper == m + h)
                tally.check("psi round-trip",
                            not v1.is_empty and psi_inverse((v1, w1), h, i) == (v, w))
        for flavor in ("greedy", "ordinary"):
            gg = g if flavor == "greedy" else build_poset(m, n, "ordinary")
            for a, b in gg.edges():
                v, w = gg.nodes[a], gg.nodes[b]
                if n < 2:
                    continue
                v1, w1 = delete_last_peak(v), delete_last_peak(w)
                tally.check(f"peak deletion along {flavor} covers",
                            v1 == w1 or w1 in covers(v1, flavor))
        rep.checks.extend(tally.entries(n))
    # K_i / (x^m t) * I  convolved with sizes |w| = |w'| + |w''| - 1
    for i in range(1, m + 2):
        for n in range(1, n_max + 1):
            lhs = _dsum(hist_J[i], n) - _dsum(hist_J[i - 1], n)
            rhs = Counter()
            for (n1, d1), c1 in hist_K[i].items():
                for (n2, d2), c2 in hist_I.items():
                    if n1 + n2 - 1 == n:
                        rhs[d1 + d2 - m] += c1 * c2
            rep.checks.append(CheckEntry(n, f"J_{i} - J_{i - 1} = K_{i} I / (x^m t)",
                                         int(lhs == rhs), 1))
            # K_i = x^m t (x J_{i-1} - x^{m+1-i} J_{i-1}(1)) / (x - 1)
            krhs = Counter()
            for (n1, d1), c1 in hist_J[i - 1].items():
                if n1 + 1 == n:
                    for h in range(m + 1 - i, d1 + 1):
                        krhs[m + h] += c1
            rep.checks.append(CheckEntry(n, f"K_{i} from J_{i - 1}",
                                         int(_dsum(hist_K[i], n) == krhs), 1))
    return rep


def _dsum(hist: Counter, n: int) -> Counter:
    return Counter({d: c for (k, d), c in hist.items() if k == n})


def verify_embedding(m_values: Sequence[int] = (2, 3), n_max: int = 4) -> List[Report]:
    """Unit-step embedding as an order isomorphism onto an upper ideal, plus
    the comparisons between greedy and ordinary orders."""
    reports = []
    for m in m_values:
        rep = Report(m)
        for n in range(1, n_max + 1):
            tally = _Tally()
            image = {embed_unit_steps(w): w for w in enumerate_paths(m, n)}
            target = {w for w in enumerate_paths(1, m * n)
                      if all(len(r) % m == 0 for r in w.word.split("0") if r)}
            tally.check("image = paths with ascents divisible by m", set(image) == target)
            for e, w in image.items():
                up = greedy_covers(e)
                tally.check("image is an upper ideal", all(c in image for c in up))
                tally.check("covers correspond",
                            sorted(up) == sorted(embed_unit_steps(c) for c in greedy_covers(w)))
            rep.checks.extend(tally.entries(n))
        reports.append(rep)
    return reports


def verify_orders(m_values: Sequence[int] = (1, 2), n_max: int = 6) -> List[Report]:
    reports = []
    for m in m_values:
        rep = Report(m)
        for n in range(1, n_max + 1):
            tally = _Tally()
            g, o = build_poset(m, n, "greedy"), build_poset(m, n, "ordinary")
            hs = [w.heights() for w in g.nodes]
            for a in range(len(g)):
                for b in _bits(g.upsets[a]):
                    tally.check("greedy interval is an ordinary interval", bool(o.upsets[a] >> b & 1))
                for b in _bits(o.upsets[a]):
                    tally.check("lower path lies below upper path",
                                all(x <= y for x, y in zip(hs[a], hs[b])))
            rep.checks.extend(tally.entries(n))
        reports.append(rep)
    if 1 in m_values or not m_values:
        g = build_poset(1, 4, "greedy")
        ideal = g.upper_ideal(DyckWord(1, "11001100"))
        chain = len(ideal) == 3 and all(g.leq(a, b) for a, b in zip(ideal, ideal[1:]))
        reports[0].checks.append(CheckEntry(4, "upper ideal of 11001100 is a 3-chain", int(chain), 1))
    return reports


def verify_conjecture(m: int | None = None, n_max: int | None = None, total: int = 8,
                      threads: int = 1) -> List[Report]:
    ms = [m] if m is not None else list(range(1, total))
    return [cf.check_conjecture(mm, n_max if n_max is not None else total - mm, threads)
            for mm in ms]


TARGETS = ("thm1.1", "eq1.1", "thm4.1", "thm5.4", "appendix", "conjecture", "labelled",
           "monoid", "prop2.1", "bijections")


def run_target(target: str, m: int | None = None, n: int | None = None,
               n_max: int | None = None, threads: int = 1):
    """Run one named suite; returns a list of reports."""
    if target == "thm1.1":
        return verify_counts("greedy", m, n_max, n)
    if target == "eq1.1":
        return verify_counts("ordinary", m, n_max, n)
    if target == "labelled":
        return verify_labelled(m, n_max, n)
    if target == "thm4.1":
        return verify_greedy_parametric([m] if m else (1, 2, 3), N=n_max or 12)
    if target == "thm5.4":
        return verify_ordinary_parametric([m] if m else (1, 2), N=n_max or 10)
    if target == "appendix":
        return [verify_identities(m or 4, max(m or 6, 1))]
    if target == "conjecture":
        return verify_conjecture(m, n_max, threads=threads)
    if target in ("monoid", "bijections"):
        fn = verify_monoid if target == "monoid" else verify_bijections
        return [fn(mm, ns[-1]) for mm, ns in _grid(STRUCTURE_GRID, m, n_max)]
    if target == "prop2.1":
        reps = verify_embedding([m] if m else (2, 3), n_max or 4)
        reps += verify_orders([m] if m else (1, 2), n_max or 6)
        return reps
    raise ValueError(f"unknown target {target!r}")
