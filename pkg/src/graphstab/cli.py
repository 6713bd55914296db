"""Command-line surface.

Exit codes: 0 success / all checks pass, 1 check failure or witness not
found, 2 usage or file-format errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reference
from .entanglement import Bipartition, entropy, is_product_across, reduce
from .graphs import graph_from_dict, graph_to_dict, graph_to_dot
from .lc import enumerate_orbit, lc_search
from .localops import local_unitary_to_dict
from .nonlocality import lhv_contradiction_certificate, lhv_solve_exhaustive, quantum_check
from .states import build_chi00, build_graph_state, state_from_dict, state_to_dict
from .verify import verify_all


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(2, f"{path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(2, f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _load_graph(path: str):
    try:
        return graph_from_dict(_load_json(path))
    except ValueError as exc:
        raise CliError(2, f"{path}: {exc}") from None


def _load_state(path: str):
    try:
        return state_from_dict(_load_json(path))
    except ValueError as exc:
        raise CliError(2, f"{path}: {exc}") from None


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _cmd_state(args: argparse.Namespace) -> int:
    if args.kind == "chi00":
        if args.graph_file is not None:
            raise CliError(2, "state build chi00 takes no file argument")
        state = build_chi00()
    else:
        if args.graph_file is None:
            raise CliError(2, "state build graph requires a graph JSON file")
        graph = _load_graph(args.graph_file)
        try:
            state = build_graph_state(graph)
        except ValueError as exc:
            raise CliError(2, f"{args.graph_file}: {exc}") from None
    _emit(state_to_dict(state))
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    seed = _load_graph(args.graph_file)
    try:
        report = enumerate_orbit(seed, max_members=args.max)
    except ValueError as exc:
        raise CliError(2, f"{args.graph_file}: {exc}") from None
    if args.format == "dot":
        blocks = []
        for i, member in enumerate(report.members):
            blocks.append(f"// member {i}, path: {','.join(member.path) or '(seed)'}")
            blocks.append(graph_to_dot(member.graph, f"member{i}"))
        print("\n".join(blocks))
        return 0
    _emit({
        "seed": graph_to_dict(report.seed),
        "truncated": report.truncated,
        "members": [
            {
                "graph": graph_to_dict(m.graph),
                "path": list(m.path),
                "witness": local_unitary_to_dict(m.witness),
            }
            for m in report.members
        ],
    })
    return 0


def _cmd_entropy(args: argparse.Namespace) -> int:
    state = _load_state(args.state_file)
    side = tuple(name for name in args.cut.split(",") if name)
    try:
        cut = Bipartition.of(state, side)
        rho = reduce(state, cut)
    except ValueError as exc:
        raise CliError(2, f"--cut {args.cut!r}: {exc}") from None
    _emit({
        "cut": list(cut.side_a),
        "complement": list(cut.side_b),
        "eigenvalues": [float(v) for v in rho.eigenvalues()],
        "entropy_bits": entropy(rho),
        "product_across_cut": is_product_across(state, cut),
    })
    return 0


def _cmd_ghz_check(args: argparse.Namespace) -> int:
    chi = build_chi00()
    origins = reference.ghz_origins()
    constraints = reference.ghz_constraints()
    report = quantum_check(chi, constraints, origins)
    satisfiable, _ = lhv_solve_exhaustive(constraints)
    contradiction, subset = lhv_contradiction_certificate(constraints)
    _emit({
        "settings": [
            {
                "origin": e.origin.to_text(),
                "constraint": e.constraint.to_text(),
                "expectation": e.expectation,
                "satisfied": e.satisfied,
            }
            for e in report.entries
        ],
        "quantum_all_satisfied": report.all_satisfied,
        "lhv_satisfiable": satisfiable,
        "contradiction": {"found": contradiction, "subset": list(subset)},
    })
    return 0 if report.all_satisfied and not satisfiable else 1


def _cmd_lc_search(args: argparse.Namespace) -> int:
    source = _load_state(args.source)
    target = _load_state(args.target)
    try:
        witness = lc_search(source, target)
    except ValueError as exc:
        raise CliError(2, str(exc)) from None
    if not witness.found:
        _emit({"found": False})
        return 1
    _emit({
        "found": True,
        "order": list(source.names),
        "witness": local_unitary_to_dict(witness.unitary),
    })
    return 0


def _cmd_verify_all(args: argparse.Namespace) -> int:
    report = verify_all()
    if args.json:
        print(report.to_json())
    else:
        print(report.to_table())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphstab",
        description="Exact verification toolkit for graph states, stabilizer groups, "
                    "local-Clifford equivalence and GHZ-type nonlocality.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="build reference states")
    state_sub = p_state.add_subparsers(dest="state_command", required=True)
    p_build = state_sub.add_parser("build", help="emit a state as JSON")
    p_build.add_argument("kind", choices=["chi00", "graph"])
    p_build.add_argument("graph_file", nargs="?", help="graph JSON (kind=graph only)")
    p_build.set_defaults(func=_cmd_state)

    p_orbit = sub.add_parser("orbit", help="enumerate the local-complementation orbit")
    p_orbit.add_argument("graph_file")
    p_orbit.add_argument("--max", type=int, default=None, help="cap on member count")
    p_orbit.add_argument("--format", choices=["json", "dot"], default="json")
    p_orbit.set_defaults(func=_cmd_orbit)

    p_entropy = sub.add_parser("entropy", help="bipartite entanglement entropy of a state")
    p_entropy.add_argument("state_file")
    p_entropy.add_argument("--cut", required=True, help="comma-separated labels of one side")
    p_entropy.set_defaults(func=_cmd_entropy)

    p_ghz = sub.add_parser("ghz-check", help="quantum correlations vs. local hidden variables")
    p_ghz.set_defaults(func=_cmd_ghz_check)

    p_search = sub.add_parser("lc-search", help="brute-force local-Clifford equivalence search")
    p_search.add_argument("source")
    p_search.add_argument("target")
    p_search.set_defaults(func=_cmd_lc_search)

    p_verify = sub.add_parser("verify-all", help="run the full verification battery")
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"graphstab: {exc}", file=sys.stderr)
        return exc.code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
