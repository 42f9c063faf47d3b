"""Command-line front end.

Prints one JSON object on stdout, ``{"status": ..., "certificate": ...}``,
with diagnostics on stderr.  Exit codes: 0 positive verdict, 1 negative
verdict with witness, 2 usage / input / cap error.  Every certificate is
re-verified before it is printed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import oracles
from .errors import CapExceeded, HallError
from .families import IndexedFamily, check_hall_condition, verify_transversal, verify_witness
from .formats import (
    InputError,
    family_from_json,
    graph_from_json,
    key,
    load_json,
    relation_from_json,
    system_from_json,
)
from .graphs import (
    Bipartition,
    check_carried,
    find_carried_function,
    hall_bipartite,
    incidence_family,
    neighbor_set_image,
    saturates,
    validate_coloring,
    validate_matching,
)
from .koenig import check_chain, find_chain, infinite_hall_prefix, lazy_family
from .relations import family_of_relation
from .solver import SolveOutcome, solve, solve_augmenting

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR = 0, 1, 2


class UnverifiedCertificate(RuntimeError):
    pass


@dataclass
class CliOutput:
    status: str
    certificate: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {"matched": EXIT_OK, "violated": EXIT_VIOLATED}.get(self.status, EXIT_ERROR)

    def emit(self, out=None, err=None) -> int:
        out = out or sys.stdout
        err = err or sys.stderr
        payload = {"status": self.status, "certificate": self.certificate}
        print(json.dumps(payload, sort_keys=True), file=out)
        for note in self.diagnostics:
            print(note, file=err)
        return self.exit_code


def _require_ok(check, what):
    if not check:
        raise UnverifiedCertificate(f"{what} failed re-verification: {check.reason} at {check.at!r}")


def _family_outcome(family: IndexedFamily, outcome: SolveOutcome, notes=()) -> CliOutput:
    if outcome.ok:
        _require_ok(verify_transversal(family, outcome.matching), "matching")
        cert = {"matching": {key(i): e for i, e in outcome.matching.items()}}
        return CliOutput("matched", cert, list(notes))
    w = outcome.violation.witness
    if not verify_witness(family, w.subset):
        raise UnverifiedCertificate(f"witness {w.subset!r} failed re-verification")
    cert = {
        "witness": [key(i) for i in w.subset],
        "subset_cardinality": w.subset_cardinality,
        "union_cardinality": w.union_cardinality,
    }
    return CliOutput("violated", cert, list(notes))


def _oracle_notes(family: IndexedFamily, matched: bool) -> list[str]:
    notes = []
    n, m = len(family.indices), len(family.universe)
    if n <= oracles.SUBSET_CAP:
        agrees = (not oracles.enumerate_subset_violations(family)) == matched
        notes.append(f"verify: subset enumeration {'agrees' if agrees else 'DISAGREES'}")
        if not agrees:
            raise UnverifiedCertificate("subset enumeration disagrees with solver")
    else:
        notes.append("verify: subset enumeration skipped (too many indices)")
    if n <= oracles.TRANSVERSAL_CAP and m <= oracles.TRANSVERSAL_CAP:
        agrees = (oracles.brute_force_transversal(family) is not None) == matched
        notes.append(f"verify: brute-force transversal {'agrees' if agrees else 'DISAGREES'}")
        if not agrees:
            raise UnverifiedCertificate("brute-force transversal disagrees with solver")
    else:
        notes.append("verify: brute-force transversal skipped (instance above cap)")
    agrees = (solve_augmenting(family) is not None) == matched
    notes.append(f"verify: augmenting solver {'agrees' if agrees else 'DISAGREES'}")
    if not agrees:
        raise UnverifiedCertificate("augmenting solver disagrees")
    return notes


def _load_family(args) -> IndexedFamily:
    if args.file is None:
        if args.seed is None:
            raise InputError("give an input file or --seed for a generated instance")
        return oracles.random_family(args.seed, args.indices, args.values, args.density)
    doc = load_json(args.file)
    if isinstance(doc, dict) and "pairs" in doc:
        return family_of_relation(relation_from_json(doc))
    return family_from_json(doc)


def cmd_check(args) -> CliOutput:
    family = _load_family(args)
    report = check_hall_condition(family)
    if report.satisfied:
        # a satisfied verdict is certified by an explicit matching
        t = solve_augmenting(family)
        if t is None:
            raise UnverifiedCertificate("Hall condition holds but no matching was found")
        return _family_outcome(family, SolveOutcome(matching=t), ["hall condition satisfied"])
    return _family_outcome(family, SolveOutcome(violation=report), ["hall condition violated"])


def cmd_solve(args) -> CliOutput:
    family = _load_family(args)
    outcome = solve(family, args.method)
    notes = [f"method: {args.method}"]
    if args.verify:
        notes += _oracle_notes(family, outcome.ok)
    return _family_outcome(family, outcome, notes)


def cmd_graph_match(args) -> CliOutput:
    g, colors = graph_from_json(load_json(args.file))
    if colors is None:
        raise InputError("graph-match needs a 'colors' object assigning 0/1 to every vertex")
    b = Bipartition(colors)
    check = validate_coloring(g, b)
    if not check:
        raise InputError(f"invalid bipartition: {check.reason} at {list(check.at) if isinstance(check.at, tuple) else check.at!r}")
    outcome = hall_bipartite(g, b, args.method)
    class0 = b.color_set(0)
    if outcome.ok:
        _require_ok(validate_matching(g, outcome.matching), "graph matching")
        _require_ok(saturates(outcome.matching, class0), "saturation")
        cert = {"matching": [list(e) for e in outcome.matching.edges]}
        return CliOutput("matched", cert, [f"saturates {len(class0)} class-0 vertices"])
    subset = outcome.violation.witness.subset
    image = neighbor_set_image(g, subset)
    if not (set(subset) <= set(class0) and len(subset) > len(image)):
        raise UnverifiedCertificate("graph witness failed re-verification")
    cert = {"witness": list(subset), "neighbors": list(image)}
    return CliOutput("violated", cert, [f"|S| = {len(subset)} > |N(S)| = {len(image)}"])


def cmd_carried(args) -> CliOutput:
    g, _ = graph_from_json(load_json(args.file))
    outcome = find_carried_function(g, args.method)
    if outcome.ok:
        _require_ok(check_carried(g, outcome.function), "carried function")
        return CliOutput("matched", {"function": dict(outcome.function.next)})
    subset = outcome.violation.witness.subset
    if not verify_witness(incidence_family(g), subset):
        raise UnverifiedCertificate("carried witness failed re-verification")
    w = outcome.violation.witness
    cert = {"witness": list(subset), "incident_edges": w.union_cardinality}
    return CliOutput("violated", cert, [f"{w.subset_cardinality} vertices share {w.union_cardinality} edges"])


def cmd_koenig(args) -> CliOutput:
    if args.lazy is not None:
        fam = lazy_family(args.lazy)
        horizon = args.horizon if args.horizon is not None else args.prefix
        outcome = infinite_hall_prefix(fam, args.prefix, horizon)
        notes = [f"lazy family {fam.name}: prefix {args.prefix}, horizon {horizon}"]
        if outcome.ok:
            _require_ok(verify_transversal(fam.prefix(args.prefix), outcome.matching), "prefix matching")
            cert = {"matching": {key(i): e for i, e in outcome.matching.items()}}
            return CliOutput("matched", cert, notes)
        return _family_outcome(fam.prefix(horizon), outcome, notes)
    if args.file is None:
        raise InputError("koenig needs an inverse-system file or --lazy NAME")
    sys_ = system_from_json(load_json(args.file))
    chain = find_chain(sys_)
    if chain is not None:
        if not check_chain(sys_, chain):
            raise UnverifiedCertificate("chain failed re-verification")
        return CliOutput("matched", {"chain": list(chain.entries)}, [f"horizon {sys_.horizon}"])
    empty = next(n for n, level in enumerate(sys_.levels) if not level)
    return CliOutput("violated", {"empty_level": empty}, [f"level {empty} is empty"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("file", nargs="?", help="family or relation JSON ('-' for stdin)")
        p.add_argument("--seed", type=int, help="generate a random family instead of reading a file")
        p.add_argument("--indices", type=int, default=6)
        p.add_argument("--values", type=int, default=6)
        p.add_argument("--density", type=float, default=0.4)

    def method_arg(p):
        p.add_argument("--method", choices=("inductive", "augmenting"), default="inductive")

    p = sub.add_parser("check", help="decide the Hall condition for a family")
    family_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="find a transversal or a violating subset")
    family_args(p)
    method_arg(p)
    p.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("graph-match", help="saturate color class 0 of a bipartite graph")
    p.add_argument("file")
    method_arg(p)
    p.set_defaults(func=cmd_graph_match)

    p = sub.add_parser("carried", help="find a carried function of a graph")
    p.add_argument("file")
    method_arg(p)
    p.set_defaults(func=cmd_carried)

    p = sub.add_parser("koenig", help="chain through an inverse system, or a countable-family prefix")
    p.add_argument("file", nargs="?")
    p.add_argument("--lazy", help="catalog family id, e.g. interval, constant:a, mod:3")
    p.add_argument("--prefix", type=int, default=0)
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_koenig)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except CapExceeded as exc:
        result = CliOutput("error", {"error": str(exc)}, [f"error: {exc}; try --method augmenting"])
    except (InputError, HallError, ValueError, OSError, UnverifiedCertificate) as exc:
        result = CliOutput("error", {"error": str(exc)}, [f"error: {exc}"])
    return result.emit()


if __name__ == "__main__":
    sys.exit(main())
