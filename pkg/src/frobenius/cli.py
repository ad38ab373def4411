"""Command-line entry point: ``frobenius <command> [options]``.

Every command writes one JSON document to standard output.  Exit status is
0 on success, 1 for malformed or invalid input, and 2 when the mathematics
says no (e.g. a Frobenius functional was required but none exists).

Example::

    frobenius index --spec p42.json --trials 5 --seed 42
    frobenius principal --spec p31.json --small path3.json
    frobenius sweep --family max-parabolic --n-max 8
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .cybe import cybe_residual, flip, r_matrix
from .errors import (
    HypothesisViolated,
    LimitExceeded,
    NoAmbient,
    NotATree,
    NotFrobenius,
    ParseError,
    ValidationError,
)
from .index import find_frobenius_functional, generic_index, is_frobenius, principal_element
from .io import (
    build_algebra,
    dumps,
    edge_set_to_json,
    element_to_json,
    frac_str,
    functional_to_json,
    parse_edge_set,
    parse_functional,
    parse_spec,
    seaweed_compositions,
    spec_to_dict,
)
from .meander import build_meander, count_components, meander_index_sl, to_dot
from .reports import build_run_report, spectrum_to_json, sweep_max_parabolics, sweep_rais, sweep_seaweeds
from .spectrum import duality_check, generation_check, integer_spectrum, lemma1_check, spectrum_invariance_check
from .trees import principal_from_tree, small_functional, theorem5_check

COMMANDS = ("index", "frobenius", "principal", "spectrum", "meander", "cybe", "theorem5", "sweep", "report")

# Raised for bad input -> exit 1; raised by the mathematics -> exit 2.
INPUT_ERRORS = (ParseError, ValidationError, LimitExceeded, NotATree, FileNotFoundError, KeyError)
MATH_ERRORS = (NotFrobenius, HypothesisViolated, NoAmbient)


class UsageError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc.strerror}") from None


def _load_spec(args):
    if not args.spec:
        raise UsageError("--spec is required")
    return parse_spec(_read(args.spec))


def _envelope(args, spec=None):
    out = {"command": args.command, "version": __version__, "seed": args.seed, "trials": args.trials}
    if spec is not None:
        out["spec"] = spec_to_dict(spec)
    return out


def _chosen_functional(args, L, required=True):
    """Functional from ``--functional`` or ``--small``, else a sampled one."""
    if args.functional:
        return parse_functional(_read(args.functional), L), None
    if args.small:
        S = parse_edge_set(_read(args.small))
        F = small_functional(S)
        missing = [label for label, _ in F.terms if label not in L.index_of]
        if missing:
            raise HypothesisViolated(f"edges {[str(m) for m in missing]} are not in {L.name}")
        return F, S
    if not required:
        return None, None
    return find_frobenius_functional(L, seed=args.seed), None


def cmd_index(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    rep = generic_index(L, trials=args.trials, seed=args.seed)
    out = _envelope(args, spec)
    out.update(dim=rep.dim, index=rep.index, frobenius=rep.index == 0, witness=functional_to_json(rep.witness, L))
    pair = seaweed_compositions(spec)
    if pair is not None:
        out["meander_index"] = meander_index_sl(*pair)
    return out


def cmd_frobenius(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    out = _envelope(args, spec)
    F = find_frobenius_functional(L, seed=args.seed)
    out.update(dim=L.dim, frobenius=True, functional=functional_to_json(F, L))
    return out


def cmd_principal(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    F, S = _chosen_functional(args, L)
    out = _envelope(args, spec)
    out.update(dim=L.dim, functional=functional_to_json(F, L), principal=element_to_json(L, principal_element(L, F)))
    if S is not None:
        out["small"] = edge_set_to_json(S)
    return out


def cmd_spectrum(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    F, _ = _chosen_functional(args, L)
    fhat = principal_element(L, F)
    report = integer_spectrum(L, fhat)
    plus, minus = generation_check(L, report)
    out = _envelope(args, spec)
    out.update(
        dim=L.dim,
        functional=functional_to_json(F, L),
        principal=element_to_json(L, fhat),
        spectrum=spectrum_to_json(report),
        checks={
            "lemma1": lemma1_check(L, F, report),
            "duality": duality_check(L, F, report),
            "invariance": spectrum_invariance_check(L, trials=3, seed=args.seed),
            "generation": {"plus": plus, "minus": minus},
        },
    )
    return out


def cmd_meander(args):
    spec = _load_spec(args)
    pair = seaweed_compositions(spec)
    if pair is None:
        raise ValidationError("kind", "meander graphs need a seaweed, max_parabolic or sl spec")
    g = build_meander(*pair)
    cc = count_components(g)
    if args.dot:
        Path(args.dot).write_text(to_dot(g), encoding="utf-8", newline="\n")
    out = _envelope(args, spec)
    out.update(
        n=g.n,
        top_arcs=sorted(list(a) for a in g.top_arcs),
        bottom_arcs=sorted(list(a) for a in g.bottom_arcs),
        cycles=cc.cycles,
        paths=cc.paths,
        index=2 * cc.cycles + cc.paths - 1,
    )
    return out


def cmd_cybe(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    F, _ = _chosen_functional(args, L)
    r = r_matrix(L, F)
    residual = cybe_residual(r)
    out = _envelope(args, spec)
    out.update(
        dim=L.dim,
        functional=functional_to_json(F, L),
        r=r.to_json(),
        skew=flip(r) == -r,
        residual_terms=len(residual.terms),
        residual_zero=residual.is_zero(),
    )
    return out


def cmd_theorem5(args):
    spec = _load_spec(args)
    if not args.small:
        raise UsageError("theorem5 needs --small")
    L = build_algebra(spec)
    S = parse_edge_set(_read(args.small))
    outcome = theorem5_check(L, S)
    F = small_functional(S)
    out = _envelope(args, spec)
    out.update(
        small=edge_set_to_json(S),
        holds=outcome.holds,
        reason=outcome.reason,
        frobenius=is_frobenius(L, F),
        tree_principal=[frac_str(x) for x in principal_from_tree(S)],
    )
    if out["frobenius"]:
        out["principal"] = element_to_json(L, principal_element(L, F))
    return out


def cmd_sweep(args):
    if args.n_max is None:
        raise UsageError("sweep needs --n-max")
    runners = {"seaweed": sweep_seaweeds, "max-parabolic": sweep_max_parabolics, "rais": sweep_rais}
    rows = runners[args.family](args.n_max, trials=args.trials, seed=args.seed)
    out = _envelope(args)
    out.update(family=args.family, n_max=args.n_max, rows=rows, all_agree=all(r["agree"] for r in rows))
    return out


def cmd_report(args):
    spec = _load_spec(args)
    L = build_algebra(spec)
    F, S = _chosen_functional(args, L, required=False)
    report = build_run_report(spec, trials=args.trials, seed=args.seed, functional=None if S else F, small=S)
    report["command"] = "report"
    return report


HANDLERS = {
    "index": cmd_index,
    "frobenius": cmd_frobenius,
    "principal": cmd_principal,
    "spectrum": cmd_spectrum,
    "meander": cmd_meander,
    "cybe": cmd_cybe,
    "theorem5": cmd_theorem5,
    "sweep": cmd_sweep,
    "report": cmd_report,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="frobenius", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", help="AlgebraSpec JSON file")
    parser.add_argument("--functional", help="Functional JSON file")
    parser.add_argument("--small", help="EdgeSet JSON file (spanning tree)")
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dot", help="write the meander graph as DOT to this file")
    parser.add_argument("--out", help="also write the JSON result to this file")
    parser.add_argument("--json", action="store_true", help="compact single-line JSON")
    parser.add_argument("--family", choices=("seaweed", "max-parabolic", "rais"), default="seaweed")
    parser.add_argument("--n-max", type=int, dest="n_max")
    return parser


def _emit(payload, args, stream):
    text = dumps(payload, compact=args.json) + "\n"
    stream.write(text)
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")


def run_command(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 1
    if args.trials < 1:
        _emit({"error": "ValidationError", "message": "--trials must be >= 1", "exit": 1}, args, stdout)
        return 1
    try:
        payload = HANDLERS[args.command](args)
    except (UsageError, *INPUT_ERRORS) as exc:
        _emit({"command": args.command, "error": type(exc).__name__, "message": str(exc), "exit": 1}, args, stdout)
        return 1
    except MATH_ERRORS as exc:
        _emit({"command": args.command, "error": type(exc).__name__, "message": str(exc), "exit": 2}, args, stdout)
        return 2
    _emit(payload, args, stdout)
    return 0


def main():
    raise SystemExit(run_command())


if __name__ == "__main__":
    main()
