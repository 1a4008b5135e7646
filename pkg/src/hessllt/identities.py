"""Machine verification of the standalone identities at desk scale.

Every check is an exact polynomial identity; a report carries the first
failing witnesses rather than a tolerance.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from hessllt.gkm import frobenius_graded, hilbert_and_betti, xi_check
from hessllt.hessenberg import HessFn, enumerate_hessenberg, find_triples
from hessllt.llt import csf_direct, k_poly, llt_direct, poincare
from hessllt.partitions import multiplicities, partitions_max_len
from hessllt.qpoly import QPoly, q_int
from hessllt.symfunc import GradedSymFunc, SymFunc, omega, power_sum_scaling


@dataclass
class Report:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, passed, witness):
        self.checks += 1
        if not passed:
            self.failures.append(witness)

    def merge(self, other):
        self.checks += other.checks
        self.failures.extend(other.failures)

    def to_json_dict(self):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": self.checks,
            "failures": self.failures,
        }


# ---------------------------------------------------------------------------
# the graded Frobenius characteristic of a polynomial ring


def f_series(n, truncation=8):
    """ch_q of Q[t_1..t_n], one degree-n symmetric function per t-degree.

    Layer d sums, over the exponent multisets of the degree-d monomials in n
    variables, the induced-trivial characteristic h_mu where mu records the
    multiplicities of the exponent values (zero included).  This is the orbit
    description, independent of the recursions it is used to verify.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    layers = []
    for d in range(truncation + 1):
        layer = SymFunc.zero(n, "h")
        for a in partitions_max_len(d, n):
            mult = multiplicities(a)
            mult[0] = n - len(a)
            mu = tuple(sorted((m for m in mult.values() if m), reverse=True))
            layer = layer + SymFunc.basis_element("h", mu)
        layers.append(layer)
    return GradedSymFunc(n, layers)


def verify_f_recursions(n, truncation=8):
    """Both recursions of ch_q(Q[t_1..t_n]) against the orbit oracle.

    (1) f_n = sum_{i=0}^n q^(n-i) h_i f_(n-i)
    (2) q^n f_n = sum_{i=0}^n (-1)^i e_i f_(n-i)
    """
    report = Report(f"f-recursions(n={n},D={truncation})")
    fs = {m: f_series(m, truncation) for m in range(n + 1)}
    for d in range(truncation + 1):
        lhs = fs[n].layer(d)
        rhs = SymFunc.zero(n)
        for i in range(n + 1):
            shift = d - (n - i)
            if shift >= 0:
                rhs = rhs + SymFunc.basis_element("h", (i,) if i else ()) * fs[
                    n - i
                ].layer(shift)
        report.record(
            lhs == rhs, {"identity": 1, "layer": d, "n": n}
        )
        lhs2 = fs[n].layer(d - n) if d >= n else SymFunc.zero(n)
        rhs2 = SymFunc.zero(n)
        for i in range(n + 1):
            term = SymFunc.basis_element("e", (i,) if i else ()) * fs[n - i].layer(d)
            rhs2 = rhs2 + term * ((-1) ** i)
        report.record(
            lhs2 == rhs2, {"identity": 2, "layer": d, "n": n}
        )
    return report


def verify_k_palindromicity(n):
    """q^(n(n-1)/2) K_n(1/q) = omega(K_n(q)), the cleared polynomial form."""
    report = Report(f"palindromicity(n={n})")
    top = n * (n - 1) // 2
    k = k_poly(n)
    reversed_k = k.map_coefficients(lambda c: c.reverse(top))
    report.record(reversed_k == omega(k), {"n": n})
    return report


# ---------------------------------------------------------------------------
# modular laws, multiplicativity, plethystic relations


def _laws_for_h(values):
    h = HessFn(values)
    n = h.n
    failures = []
    checks = 0
    fns = {"llt": llt_direct, "csf": csf_direct}
    for r in range(1, n + 1):
        for t in find_triples(h, "middle", r):
            for name, fn in fns.items():
                lhs = fn(h) * q_int(r + 1)
                rhs = fn(t.h_plus) + fn(t.h_minus) * q_int(r).shift(1)
                checks += 1
                if lhs != rhs:
                    failures.append(
                        {
                            "law": f"general-r-{name}",
                            "h": list(values),
                            "kind": t.kind,
                            "r": r,
                            "params": list(t.params),
                        }
                    )
    if h.is_decomposable():
        for name, fn in fns.items():
            prod = SymFunc.one()
            for block in h.decompose():
                prod = prod * fn(block)
            checks += 1
            if fn(h) != prod:
                failures.append(
                    {"law": f"multiplicativity-{name}", "h": list(values)}
                )
    return checks, failures


def _plethystic_for_h(values):
    h = HessFn(values)
    n = h.n
    failures = []
    checks = 0
    llt = llt_direct(h)
    csf = csf_direct(h)
    q = QPoly.q()
    cm = power_sum_scaling(llt, lambda k: QPoly.monomial(k) - 1)
    checks += 1
    if cm != csf * ((q - 1) ** n):
        failures.append({"relation": "carlsson-mellit", "h": list(values)})
    par = power_sum_scaling(llt, lambda k: QPoly.one() - QPoly.monomial(k))
    checks += 1
    if par != omega(csf) * ((1 - q) ** n):
        failures.append({"relation": "parallel-plethystic", "h": list(values)})
    return checks, failures


def _run_per_h(worker, all_values, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, all_values))
    else:
        results = [worker(v) for v in all_values]
    return results


def verify_laws(n_max, jobs=1):
    """Modular and general-r laws plus multiplicativity, n <= n_max."""
    report = Report(f"laws(n<={n_max})")
    all_values = [
        h.values for n in range(1, n_max + 1) for h in enumerate_hessenberg(n)
    ]
    for checks, failures in _run_per_h(_laws_for_h, all_values, jobs):
        report.checks += checks
        report.failures.extend(failures)
    return report


def verify_plethystic(n_max, jobs=1):
    """Carlsson-Mellit and the parallel plethystic relation, n <= n_max."""
    report = Report(f"plethystic(n<={n_max})")
    all_values = [
        h.values for n in range(1, n_max + 1) for h in enumerate_hessenberg(n)
    ]
    for checks, failures in _run_per_h(_plethystic_for_h, all_values, jobs):
        report.checks += checks
        report.failures.extend(failures)
    return report


def _gkm_llt_for_h(args):
    values, mode, seed = args
    h = HessFn(values)
    failures = []
    checks = 0
    dagger = frobenius_graded(h, "dagger", mode=mode, seed=seed)
    checks += 1
    if dagger.to_symfunc() != llt_direct(h):
        failures.append({"check": "dagger-vs-llt", "h": list(values)})
    dot = frobenius_graded(h, "dot", mode=mode, seed=seed)
    checks += 1
    if dot.to_symfunc() != omega(csf_direct(h)):
        failures.append({"check": "dot-vs-omega-csf", "h": list(values)})
    _, betti = hilbert_and_betti(h, "twin", mode=mode, seed=seed)
    checks += 1
    if betti != poincare(h):
        failures.append({"check": "betti-vs-poincare", "h": list(values)})
    for d in range(h.complex_dimension() + h.n + 1):
        checks += 1
        if not xi_check(h, d, mode=mode, seed=seed):
            failures.append({"check": "xi", "h": list(values), "d": d})
    return checks, failures


def verify_gkm_llt(n_max, mode="modp", seed=0, jobs=1):
    """GKM pipelines against the combinatorial engines, n <= n_max."""
    report = Report(f"gkm-llt(n<={n_max})")
    all_args = [
        (h.values, mode, seed)
        for n in range(1, n_max + 1)
        for h in enumerate_hessenberg(n)
    ]
    for checks, failures in _run_per_h(_gkm_llt_for_h, all_args, jobs):
        report.checks += checks
        report.failures.extend(failures)
    return report
