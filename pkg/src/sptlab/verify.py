"""Named invariant checks, grouped into suites, with a pass/fail report.

Each check returns ``(range_descriptor, counterexample)``; a counterexample
of ``None`` means the check passed.  Checks call library functions through
their modules so that a patched module is what actually gets verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bijections, doubly_marked as dm, partitions as pt, qseries, ranks, spt
from .errors import CapacityError

SUITES = ("all", "gf", "bijections", "congruences", "recurrence", "dyson", "obrien")


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    range: str
    passed: bool
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "suite": self.suite, "range": self.range, "passed": self.passed}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {"overall": self.overall, "checks": [c.to_json() for c in self.checks]}


_REGISTRY: list = []


def check(suite: str, default_max: int, fixed: bool = False):
    """Register a check; ``fixed`` checks ignore ``--max-n`` (their bound is not a weight)."""

    def register(fn):
        _REGISTRY.append((fn.__name__.removeprefix("check_"), suite, default_max, fixed, fn))
        return fn

    return register


def _first(items):
    return next(iter(items), None)


def _progression(residue, modulus, max_n, start_index=0):
    k = start_index
    while modulus * k + residue <= max_n:
        yield k, modulus * k + residue
        k += 1


# ---- congruences -------------------------------------------------------------


@check("congruences", 19)
def check_spt_mod_5(max_n, opts):
    bad = _first({"n": w, "spt": s} for _, w in _progression(4, 5, max_n) if (s := spt.spt_weighted(w)) % 5)
    return f"spt(5k+4), 5k+4 <= {max_n}", bad


@check("congruences", 19)
def check_spt_mod_7(max_n, opts):
    bad = _first({"n": w, "spt": s} for _, w in _progression(5, 7, max_n) if (s := spt.spt_weighted(w)) % 7)
    return f"spt(7k+5), 7k+5 <= {max_n}", bad


@check("congruences", 19)
def check_spt_mod_13(max_n, opts):
    bad = _first({"n": w, "spt": s} for _, w in _progression(6, 13, max_n) if (s := spt.spt_weighted(w)) % 13)
    return f"spt(13k+6), 13k+6 <= {max_n}", bad


@check("congruences", 29)
def check_p_mod_5(max_n, opts):
    bad = _first({"n": w, "p": p} for _, w in _progression(4, 5, max_n) if (p := ranks.partition_count(w)) % 5)
    return f"p(5k+4), 5k+4 <= {max_n}", bad


@check("congruences", 33)
def check_p_mod_7(max_n, opts):
    bad = _first({"n": w, "p": p} for _, w in _progression(5, 7, max_n) if (p := ranks.partition_count(w)) % 7)
    return f"p(7k+5), 7k+5 <= {max_n}", bad


@check("congruences", 28)
def check_p_mod_11(max_n, opts):
    bad = _first({"n": w, "p": p} for _, w in _progression(6, 11, max_n) if (p := ranks.partition_count(w)) % 11)
    return f"p(11k+6), 11k+6 <= {max_n}", bad


# ---- dyson -------------------------------------------------------------------


@check("dyson", 25)
def check_rank_symmetry(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            counts = ranks.rank_counts(n).counts
            for m, c in counts.items():
                if counts.get(-m, 0) != c:
                    yield {"n": n, "m": m}

    return f"N(m,n) = N(-m,n), n <= {max_n}", _first(bad_cases())


@check("dyson", 25)
def check_rank_residue_totals(max_n, opts):
    bad = _first(
        {"n": n, "t": t}
        for n in range(1, max_n + 1)
        for t in (5, 7, 13)
        if sum(ranks.rank_count_mod(i, t, n) for i in range(t)) != ranks.partition_count(n)
    )
    return f"sum_i N(i,t,n) = p(n), t in 5,7,13, n <= {max_n}", bad


@check("dyson", 19)
def check_dyson_mod_5(max_n, opts):
    bad = _first(
        {"n": w, "i": i}
        for _, w in _progression(4, 5, max_n)
        for i in range(5)
        if 5 * ranks.rank_count_mod(i, 5, w) != ranks.partition_count(w)
    )
    return f"N(i,5,5k+4) = p(5k+4)/5, 5k+4 <= {max_n}", bad


@check("dyson", 19)
def check_dyson_mod_7(max_n, opts):
    bad = _first(
        {"n": w, "i": i}
        for _, w in _progression(5, 7, max_n)
        for i in range(7)
        if 7 * ranks.rank_count_mod(i, 7, w) != ranks.partition_count(w)
    )
    return f"N(i,7,7k+5) = p(7k+5)/7, 7k+5 <= {max_n}", bad


@check("dyson", 20)
def check_spt_moment_formula(max_n, opts):
    bad = _first(
        {"n": n, "moments": a, "weighted": b}
        for n in range(1, max_n + 1)
        if (a := ranks.spt_via_moments(n)) != (b := spt.spt_weighted(n))
    )
    return f"n p(n) - N_2(n)/2 = spt(n), n <= {max_n}", bad


# ---- obrien ------------------------------------------------------------------


@check("obrien", 19)
def check_obrien_identities(max_n, opts):
    def bad_cases():
        for k, w in _progression(6, 13, max_n):
            first, second = ranks.obrien_check(k)
            if not (first and second):
                vec = ranks.obrien_vector(k)
                yield {"n_index": k, "S": list(vec.S), "sums": [vec.first_sum, vec.second_sum]}

    return f"mod-13 rank identities at q^(13k), 13k+6 <= {max_n}", _first(bad_cases())


@check("obrien", 19, fixed=True)
def check_obrien_base_values(max_n, opts):
    vec = ranks.obrien_vector(0)
    expected = (-7, -4, -4, -2, -3)
    bad = None if vec.S == expected and (vec.first_sum, vec.second_sum) == (0, -39) else {"S": list(vec.S)}
    return "S_1..S_5 at weight 6", bad


# ---- recurrence --------------------------------------------------------------


@check("recurrence", 30)
def check_partition_count(max_n, opts):
    bad = _first(
        {"n": n}
        for n in range(0, max_n + 1)
        if ranks.partition_count(n) != sum(1 for _ in pt.enumerate_partitions(n))
    )
    return f"pentagonal p(n) = |P(n)|, n <= {max_n}", bad


@check("recurrence", 20)
def check_spt_agreement(max_n, opts):
    cap = opts.get("s_partition_cap", spt.S_PARTITION_CAP)
    brute = min(max_n, 14, cap)

    def bad_cases():
        for n in range(1, max_n + 1):
            values = {
                "weighted": spt.spt_weighted(n),
                "marked": sum(1 for _ in spt.enumerate_marked(n)),
                "moments": ranks.spt_via_moments(n),
            }
            if n <= brute:
                values["s_partitions"] = sum(spt.s_partition_net_counts(n, cap).net.values())
            if len(set(values.values())) != 1:
                yield {"n": n, **values}

    return f"spt(n) by every method, n <= {max_n} (S-partitions n <= {brute})", _first(bad_cases())


@check("recurrence", 14)
def check_recurrence_vs_s_partitions(max_n, opts):
    cap = opts.get("s_partition_cap", spt.S_PARTITION_CAP)
    top = min(max_n, cap)

    def bad_cases():
        for n in range(1, top + 1):
            net = spt.s_partition_net_counts(n, cap).net
            for m in range(-n, n + 1):
                if spt.ns_recurrence(m, n) != net.get(m, 0):
                    yield {"n": n, "m": m}

    return f"recurrence N_S(m,n) = signed S-partition count, n <= {top}", _first(bad_cases())


@check("recurrence", 14)
def check_dmp_vs_s_partitions(max_n, opts):
    cap = opts.get("s_partition_cap", spt.S_PARTITION_CAP)
    top = min(max_n, cap)

    def bad_cases():
        for n in range(1, top + 1):
            net = spt.s_partition_net_counts(n, cap).net
            q = dm.dmp_crank_counts(n)
            for m in set(net) | set(q):
                if net.get(m, 0) != q.get(m, 0):
                    yield {"n": n, "m": m, "N_S": net.get(m, 0), "Q": q.get(m, 0)}

    return f"N_S(m,n) = |Q_(m,n)| against S-partitions, n <= {top}", _first(bad_cases())


@check("recurrence", 30)
def check_dmp_vs_recurrence(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            q = dm.dmp_crank_counts(n)
            for m in range(-n - 1, n + 2):
                if spt.ns_recurrence(m, n) != q.get(m, 0):
                    yield {"n": n, "m": m}

    return f"|Q_(m,n)| = recurrence, n <= {max_n}", _first(bad_cases())


@check("recurrence", 30)
def check_ns_nonnegative(max_n, opts):
    bad = _first(
        {"n": n, "m": m, "value": v}
        for n in range(1, max_n + 1)
        for m in range(-n - 1, n + 2)
        if (v := spt.ns_recurrence(m, n)) < 0
    )
    return f"N_S(m,n) >= 0, n <= {max_n}", bad


@check("recurrence", 25)
def check_ns_symmetry(max_n, opts):
    bad = _first(
        {"n": n, "m": m}
        for n in range(1, max_n + 1)
        for m in range(1, n + 1)
        if spt.ns_recurrence(m, n) != spt.ns_recurrence(-m, n)
    )
    return f"N_S(m,n) = N_S(-m,n), n <= {max_n}", bad


# ---- bijections --------------------------------------------------------------


@check("bijections", 20)
def check_psi_phi(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            seen = set()
            for x in dm.enumerate_dmp(n):
                c = dm.spt_crank_dmp(x)
                y = dm.psi(x)
                if y.weight != n or not dm.v_membership(y, c) or dm.phi(y, c) != x or (c, y) in seen:
                    yield {"dmp": x.to_json()}
                seen.add((c, y))

    return f"phi(psi(x)) = x, psi injective, psi(x) in V, weight <= {max_n}", _first(bad_cases())


@check("bijections", 20)
def check_phi_psi(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            q = dm.dmp_crank_counts(n)
            for m in range(-n, n + 1):
                count = 0
                for y in dm.enumerate_V(m, n):
                    count += 1
                    x = dm.phi(y, m)
                    if not dm.is_doubly_marked(x) or dm.spt_crank_dmp(x) != m or dm.psi(x) != y:
                        yield {"pair": y.to_json(), "m": m}
                if count != q.get(m, 0):
                    yield {"n": n, "m": m, "V": count, "Q": q.get(m, 0)}

    return f"psi(phi(y)) = y and |V_(m,n)| = |Q_(m,n)|, n <= {max_n}", _first(bad_cases())


def enumerate_U(n):
    for lam in pt.partitions_of(n):
        for s in range(1, pt.durfee_side(lam) + 1):
            for t in range(1, lam[0] + 1):
                yield dm.ColumnMarkedPartition(lam, s, t)


@check("bijections", 12)
def check_tau_sigma(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            images = set()
            for x in enumerate_U(n):
                if dm.is_doubly_marked(x):
                    continue
                y = bijections.tau(x)
                images.add(y)
                if sum(y.parts) != n or not bijections.in_W(y) or bijections.sigma(y) != x:
                    yield {"x": x.to_json()}
            W = {x for x in enumerate_U(n) if bijections.in_W(x)}
            if W != images:
                yield {"n": n, "W_minus_image": [w.to_json() for w in sorted(W - images)][:3]}

    return f"sigma o tau = id on U\\Q, tau onto W, n <= {max_n}", _first(bad_cases())


@check("bijections", 20)
def check_delta_lambda(max_n, opts):
    def bad_cases():
        for n in range(1, max_n + 1):
            images = []
            for mp in spt.enumerate_marked(n):
                seed = dm.ColumnMarkedPartition(pt.conjugate(mp.parts), 1, mp.k)
                if bijections.in_W(seed):
                    yield {"seed_in_W": mp.to_json()}
                x, trace = bijections.delta_with_trace(mp)
                if any(sum(step.parts) != n for step in trace.steps) or bijections.lambda_inv(x) != mp:
                    yield {"marked": mp.to_json()}
                images.append(x)
            if sorted(images) != sorted(dm.enumerate_dmp(n)):
                yield {"n": n, "reason": "Delta image differs from the doubly marked partitions"}

    return f"Lambda o Delta = id, Delta onto Q_n, n <= {max_n}", _first(bad_cases())


@check("bijections", 19)
def check_equinumerous_classes(max_n, opts):
    def bad_cases():
        for modulus, residue in ((5, 4), (7, 5)):
            for _, w in _progression(residue, modulus, max_n):
                report = bijections.crank_classes(w, modulus)
                if not report.equinumerous or sum(report.sizes) != spt.spt_weighted(w):
                    yield {"n": w, "modulus": modulus, "sizes": report.sizes}

    return f"equal crank classes mod 5 (5k+4) and mod 7 (7k+5), n <= {max_n}", _first(bad_cases())


# ---- gf ----------------------------------------------------------------------


@check("gf", 40)
def check_gf_spt(max_n, opts):
    a = qseries.gf_spt(max_n)
    b = qseries.gf_spt_alt(max_n)
    bad = _first({"n": n, "gf": a[n], "alt": b[n]} for n in range(max_n + 1) if a[n] != b[n])
    if bad is None:
        bad = _first({"n": n, "gf": a[n]} for n in range(1, max_n + 1) if a[n] != spt.spt_weighted(n))
    return f"both spt generating functions = spt(n), order {max_n}", bad


@check("gf", 30)
def check_gf_ns(max_n, opts):
    def bad_cases():
        for m in range(-10, 11):
            g = qseries.gf_NS(m, max_n)
            for n in range(1, max_n + 1):
                q = dm.dmp_crank_counts(n).get(m, 0)
                if g[n] != q or g[n] != spt.ns_recurrence(m, n):
                    yield {"m": m, "n": n, "series": g[n], "Q": q}

    return f"[q^n] gf_NS(m) = |Q_(m,n)| = recurrence, |m| <= 10, n <= {max_n}", _first(bad_cases())


@check("gf", 16)
def check_gf_cells(max_n, opts):
    counts = {}
    for n in range(1, max_n + 1):
        for pair in dm.enumerate_pairs(n):
            for key in dm.v_memberships(pair):
                counts[key + (n,)] = counts.get(key + (n,), 0) + 1
    cells = {key[:3] for key in counts}
    # Cells the enumeration never hit must vanish, so also sweep a fixed grid.
    cells |= {(m, j, h) for m in range(-4, 5) for j in range(5) for h in range(j + 1)}

    def bad_cases():
        for m, j, h in sorted(cells):
            series = qseries.gf_V_cell(m, j, h, max_n)
            for n in range(1, max_n + 1):
                if series[n] != counts.get((m, j, h, n), 0):
                    yield {"m": m, "j": j, "h": h, "n": n, "series": series[n], "count": counts.get((m, j, h, n), 0)}

    return f"per-cell series = |V^(j,h)_(m,n)|, n <= {max_n}", _first(bad_cases())


@check("gf", 8, fixed=True)
def check_gaussian_binomial(max_n, opts):
    def bad_cases():
        for top in range(max_n + 1):
            for bottom in range(top + 1):
                width = top - bottom
                deg = bottom * width
                series = qseries.gaussian_binomial(top, bottom, deg)
                for w in range(deg + 1):
                    box = sum(1 for lam in pt.enumerate_partitions(w, max_part=width) if len(lam) <= bottom)
                    if series[w] != box:
                        yield {"top": top, "bottom": bottom, "w": w}

    return f"Gaussian binomials count partitions in a box, top <= {max_n}", _first(bad_cases())


def run(suite: str = "all", max_n: int | None = None, s_partition_cap: int = spt.S_PARTITION_CAP) -> VerificationReport:
    if suite not in SUITES:
        raise KeyError(suite)
    opts = {"s_partition_cap": s_partition_cap}
    results = []
    for name, check_suite, default_max, fixed, fn in _REGISTRY:
        if suite != "all" and check_suite != suite:
            continue
        limit = default_max if max_n is None or fixed else max_n
        try:
            described, bad = fn(limit, opts)
        except CapacityError as exc:
            described, bad = f"n <= {limit}", {"error": str(exc)}
        results.append(Check(name, check_suite, described, bad is None, bad))
    return VerificationReport(tuple(sorted(results, key=lambda c: c.name)))
