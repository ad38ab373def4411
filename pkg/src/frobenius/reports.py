"""Run reports and exhaustive sweeps, all rendered as plain JSON-ready dicts."""

from __future__ import annotations

from math import gcd

from . import __version__
from .cybe import flip, is_cybe_solution, r_matrix
from .errors import FrobeniusError, HypothesisViolated, LimitExceeded
from .index import find_frobenius_functional, generic_index, principal_element
from .io import (
    build_algebra,
    edge_set_to_json,
    element_to_json,
    frac_str,
    functional_to_json,
    seaweed_compositions,
    spec_to_dict,
)
from .lie import MatrixUnit, compositions, contains_cartan, maximal_parabolic, rais_algebra, seaweed
from .meander import meander_index_sl
from .spectrum import (
    duality_check,
    generation_check,
    integer_spectrum,
    is_unbroken,
    lemma1_check,
    spectrum_invariance_check,
)
from .trees import principal_from_tree, small_functional, theorem5_check

__all__ = [
    "SEAWEED_SWEEP_LIMIT",
    "spectrum_to_json",
    "build_run_report",
    "sweep_seaweeds",
    "sweep_max_parabolics",
    "sweep_rais",
]

SEAWEED_SWEEP_LIMIT = 7
MAX_PARABOLIC_SWEEP_LIMIT = 10
RAIS_SWEEP_LIMIT = 6


def spectrum_to_json(report):
    return {
        "certified_semisimple": report.certified_semisimple,
        "eigenvalues": [[lam, m] for lam, m in sorted(report.eigenvalues.items())],
        "unbroken": is_unbroken(report),
    }


def build_run_report(spec, trials=5, seed=0, functional=None, small=None, with_cybe=True):
    """Every computation for one algebra, bundled into one dict.

    The functional used is ``functional`` if given, else the small
    functional of the edge set ``small``, else a sampled Frobenius one.
    Checks that do not apply (e.g. a non-Frobenius algebra) are ``None``.
    """
    L = build_algebra(spec)
    idx = generic_index(L, trials=trials, seed=seed)
    report = {
        "version": __version__,
        "spec": spec_to_dict(spec),
        "seed": seed,
        "trials": trials,
        "dim": L.dim,
        "index": idx.index,
        "frobenius": idx.index == 0,
        "witness": functional_to_json(idx.witness, L),
        "functional": None,
        "principal": None,
        "spectrum": None,
        "checks": {
            "lemma1": None,
            "duality": None,
            "invariance": None,
            "generation": None,
            "theorem5": None,
            "cybe": None,
        },
    }
    pair = seaweed_compositions(spec)
    if pair is not None:
        report["meander_index"] = meander_index_sl(*pair)
    if small is not None:
        F = small_functional(small)
        missing = [e for e in small.edges if MatrixUnit(*e) not in L.index_of]
        if missing:
            raise HypothesisViolated(f"edges {missing} are not in {L.name}")
        report["small"] = edge_set_to_json(small)
        report["tree_principal"] = [frac_str(x) for x in principal_from_tree(small)]
    elif functional is not None:
        F = functional
    elif idx.index == 0:
        F = find_frobenius_functional(L, seed=seed)
    else:
        return report
    report["functional"] = functional_to_json(F, L)
    try:
        fhat = principal_element(L, F)
    except FrobeniusError:
        return report
    report["principal"] = element_to_json(L, fhat)
    spectrum = integer_spectrum(L, fhat)
    report["spectrum"] = spectrum_to_json(spectrum)
    checks = report["checks"]
    checks["lemma1"] = lemma1_check(L, F, spectrum)
    checks["duality"] = duality_check(L, F, spectrum)
    checks["invariance"] = spectrum_invariance_check(L, trials=3, seed=seed)
    plus, minus = generation_check(L, spectrum)
    checks["generation"] = {"minus": minus, "plus": plus}
    if small is not None and L.realization is not None and L.is_traceless() and contains_cartan(L):
        try:
            checks["theorem5"] = theorem5_check(L, small).holds
        except FrobeniusError:
            checks["theorem5"] = None
    if with_cybe and L.realization is not None:
        r = r_matrix(L, F)
        checks["cybe"] = {"residual_zero": is_cybe_solution(r), "skew": flip(r) == -r, "terms": len(r.terms)}
    return report


def sweep_seaweeds(n_max, trials=5, seed=0, n_min=2):
    """Meander index against sampled generic index for every composition pair."""
    if n_max > SEAWEED_SWEEP_LIMIT:
        raise LimitExceeded(f"seaweed sweeps are limited to n_max <= {SEAWEED_SWEEP_LIMIT}")
    rows = []
    for n in range(n_min, n_max + 1):
        comps = compositions(n)
        for top in comps:
            for bottom in comps:
                L = seaweed(top, bottom)
                m = meander_index_sl(top, bottom)
                g = generic_index(L, trials=trials, seed=seed).index
                rows.append(
                    {
                        "n": n,
                        "top": list(top),
                        "bottom": list(bottom),
                        "dim": L.dim,
                        "meander_index": m,
                        "generic_index": g,
                        "agree": m == g,
                    }
                )
    rows.sort(key=lambda r: (r["n"], r["top"], r["bottom"]))
    return rows


def sweep_max_parabolics(n_max, trials=5, seed=0):
    if n_max > MAX_PARABOLIC_SWEEP_LIMIT:
        raise LimitExceeded(f"max-parabolic sweeps are limited to n_max <= {MAX_PARABOLIC_SWEEP_LIMIT}")
    rows = []
    for n in range(2, n_max + 1):
        for i in range(1, n):
            L = maximal_parabolic(n, i)
            g = generic_index(L, trials=trials, seed=seed).index
            coprime = gcd(i, n) == 1
            rows.append(
                {
                    "n": n,
                    "i": i,
                    "dim": L.dim,
                    "index": g,
                    "frobenius": g == 0,
                    "coprime": coprime,
                    "agree": (g == 0) == coprime,
                }
            )
    return rows


def sweep_rais(n_max, trials=5, seed=0):
    if n_max > RAIS_SWEEP_LIMIT:
        raise LimitExceeded(f"rais sweeps are limited to n_max <= {RAIS_SWEEP_LIMIT}")
    rows = []
    for n in range(1, n_max + 1):
        for p in range(1, n + 1):
            L = rais_algebra(n, p)
            g = generic_index(L, trials=trials, seed=seed).index
            divides = n % p == 0
            rows.append(
                {
                    "n": n,
                    "p": p,
                    "dim": L.dim,
                    "index": g,
                    "frobenius": g == 0,
                    "divides": divides,
                    "agree": (g == 0) == divides,
                }
            )
    return rows
