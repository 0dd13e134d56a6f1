"""Named verification suites and the discrepancy ledger."""

from __future__ import annotations

from . import calculus, dual, hopf, rmatrix
from .algebra import DEFAULT_BOUND, Bound
from .report import DISCREPANCY, Report, merge


def _rtt(bound):
    return merge("rtt", [rmatrix.rtt_extract()[1], rmatrix.verify_r_construction()], None)


def _rll(bound):
    lm = rmatrix.build_l_matrices()
    return merge("rll", [rmatrix.verify_l_definitions(lm, bound), rmatrix.verify_rll(bound, lm)], bound)


def _dj(bound):
    lm = rmatrix.build_l_matrices()
    return merge("dj", [rmatrix.verify_block_and_dj(bound, lm), rmatrix.verify_l_display(lm)], bound)


def _dual(bound):
    parts = [dual.verify_dual_algebra(bound), dual.verify_dual_coalgebra(bound), dual.dual_unit_checks(bound)]
    return merge("dual", parts, bound)


def _glpq(bound):
    parts = []
    for N in (1, 2, 3):
        parts.append(hopf.glpq_relation_check(N))
        parts.append(calculus.glpq_calculus(N))
    return merge("glpq", parts, None)


def _named(name, fn, takes_bound=True):
    def run(bound):
        rep = fn(bound) if takes_bound else fn()
        rep.suite = name
        if not takes_bound:
            rep.bound = None
        return rep
    return run


SUITES = {
    "hopf": _named("hopf", hopf.verify_hopf_axioms),
    "confluence": _named("confluence", hopf.confluence_check, takes_bound=False),
    "qybe": _named("qybe", rmatrix.qybe_report, takes_bound=False),
    "rtt": _rtt,
    "rll": _rll,
    "dj": _dj,
    "pairing": _named("pairing", dual.verify_pairing_tables),
    "dual": _dual,
    "calculus": _named("calculus", calculus.verify_calculus_tables, takes_bound=False),
    "leibniz": _named("leibniz", calculus.verify_leibniz_bicovariance),
    "glpq": _glpq,
}


def run_suite(name: str, bound: Bound = DEFAULT_BOUND) -> Report:
    if name == "all":
        return merge("all", [SUITES[n](bound) for n in SUITES], bound)
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}") from None
    rep = fn(bound)
    rep.bound = bound
    return rep


def ledger(bound: Bound = DEFAULT_BOUND) -> Report:
    """Every printed-text discrepancy found by the suites."""
    full = run_suite("all", bound)
    out = Report("ledger", bound)
    out.checks = [c for c in full.checks if c.status == DISCREPANCY]
    return out
