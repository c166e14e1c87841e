"""Command-line entry point: ``fano-k0 <command> [--json] [--quiet]``.

Exit codes: 0 success, 1 usage or validation error, 2 a mathematical
check failed (the JSON payload is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import ak, bundles, lattice, sod
from .chow import format_rational
from .ktheory import STRUCTURE_SHEAF_KINDS, chi0_coefficients, gram, structure_sheaf_basis, todd
from .registry import ClassificationError, all_descriptors, validate

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    payload: object = None
    rendered: str = ""
    error: str = field(default="")

    def dumps(self) -> str:
        return json.dumps(self.payload, indent=2, sort_keys=True, ensure_ascii=False)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _matrix_text(m) -> str:
    return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in m) + "]"


def cmd_classify(args) -> CommandResult:
    descs = list(all_descriptors(args.index))
    payload = [f.to_json() for f in descs]
    rows = [[f.name, f.index, f.degree, f.genus or "", f.to_json()["description"]] for f in descs]
    return CommandResult(EXIT_OK, payload, _table(["name", "index", "degree", "genus", "description"], rows))


def cmd_k0(args) -> CommandResult:
    f = validate(args.index, args.degree)
    basis = structure_sheaf_basis(f)
    td = todd(f)
    coeffs = chi0_coefficients(f)
    g = gram(basis)
    payload = {
        "descriptor": f.to_json(),
        "basis": {f"O_{k}": b.ch.to_json() for k, b in zip(STRUCTURE_SHEAF_KINDS, basis)},
        "todd": td.to_json(),
        "chi0": [format_rational(c) for c in coeffs],
        "gram": lattice.matrix_to_json(g),
    }
    lines = [f"{f.name}: index {f.index}, degree {f.degree}" + (f", genus {f.genus}" if f.genus else "")]
    lines += [f"ch(O_{k}) = {b.ch}" for k, b in zip(STRUCTURE_SHEAF_KINDS, basis)]
    lines.append(f"td = {td}")
    a, b, c, e = (format_rational(q) for q in coeffs)
    lines.append(f"chi0(x + yH + zL + wP) = {a} x + {b} y + {c} z + {e} w")
    lines.append(f"Euler Gram = {_matrix_text(g)}")
    return CommandResult(EXIT_OK, payload, "\n".join(lines))


def cmd_verify_rr(args) -> CommandResult:
    if args.all:
        ds = list(range(1, 6))
    elif args.d is None:
        raise UsageError("give d in [1, 5] or --all")
    else:
        ds = [args.d]
    for d in ds:
        if not 1 <= d <= 5:
            raise UsageError(f"d must lie in [1, 5], got {d}")
    reports = [sod.verify_complement_isometry(d, args.bound) for d in ds]
    payload = [r.to_json() for r in reports]
    lines = []
    for r in reports:
        tag = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{tag} d={r.d} g={r.g} gramA={_matrix_text(r.gram_a)} gramB={_matrix_text(r.gram_b)} "
            f"witness={_matrix_text(sod.ComplementIsometryReport.WITNESS)} ({len(r.witnesses)} isometries within bound {args.bound})"
        )
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK
    return CommandResult(code, payload, "\n".join(lines))


def cmd_sod(args) -> CommandResult:
    f = validate(args.index, args.degree)
    gens = sod.standard_collection(f, args.collection)
    rep = sod.check_exceptional(gens)
    comp = sod.right_orthogonal(gens)
    payload = {"descriptor": f.to_json(), "exceptional": rep.to_json(), "complement": comp.to_json()}
    lines = [f"{f.name}: collection " + ", ".join(str(c) for c in gens) + f" is {rep.verdict}"]
    lines.append(f"right orthogonal has rank {comp.rank}")
    lines += [f"  {b}  coordinates {tuple(c)}" for b, c in zip(comp.basis, comp.coordinates)]
    lines.append(f"Euler Gram = {_matrix_text(comp.gram.matrix)}")
    code = EXIT_OK if rep.numerically_exceptional else EXIT_CHECK
    return CommandResult(code, payload, "\n".join(lines))


def cmd_bundle(args) -> CommandResult:
    if args.side == "index1":
        if args.t is None:
            raise UsageError("index1 needs --t")
        rep = bundles.numerology_index1(args.d, args.t)
    else:
        if args.k is None:
            raise UsageError("index2 needs --k")
        rep = bundles.numerology_index2(args.d, args.k)
    payload = rep.to_json()
    text = f"{rep.side} {rep.inputs}: chi = {rep.chi}, degree = {rep.degree}"
    if rep.printed_degree is not None:
        text += f", printed degree = {rep.printed_degree}" + (" (DISCREPANCY)" if rep.discrepancy else "")
    return CommandResult(EXIT_OK, payload, text)


def cmd_coincidence(args) -> CommandResult:
    rep = bundles.coincidence_check(args.d, args.k, args.t)
    text = "\n".join(
        [
            f"d={rep.d} k={rep.k} t={rep.t}: d + 1 = 2k - t is {rep.condition}",
            f"dimensions {rep.dim_index1} / {rep.dim_index2} coincide: {rep.dimensions_coincide}",
            f"computed degrees {rep.degree_index1} / {rep.degree_index2} coincide: {rep.degrees_coincide}",
            f"printed index 1 degree {rep.printed_degree_index1}",
        ]
    )
    return CommandResult(EXIT_OK, rep.to_json(), text)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_isometry(args) -> CommandResult:
    g1 = lattice.BilinearLattice.from_json(_load_json(args.g1))
    g2 = lattice.BilinearLattice.from_json(_load_json(args.g2))
    if g1.rank != g2.rank:
        raise UsageError(f"ranks differ: {g1.rank} vs {g2.rank}")
    found = lattice.find_isometries(g1, g2, args.bound)
    payload = {"g1": g1.to_json(), "g2": g2.to_json(), "bound": args.bound,
               "witnesses": [lattice.matrix_to_json(a) for a in found]}
    lines = [f"{len(found)} isometries with entries in [-{args.bound}, {args.bound}]"]
    lines += [f"  {_matrix_text(a)}" for a in found]
    return CommandResult(EXIT_OK, payload, "\n".join(lines))


def cmd_ak(args) -> CommandResult:
    data = ak.PairingData.from_json(_load_json(args.input))
    v = ak.ak_compatible(data)
    text = f"AK-compatible: {v.verdict} ({v.reason})"
    return CommandResult(EXIT_OK, v.to_json(), text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON payload")
    common.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")

    parser = _Parser(prog="fano-k0", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="list deformation classes")
    p.add_argument("--index", type=int, choices=[1, 2, 3, 4])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("k0", parents=[common], help="structure-sheaf basis, Todd class, Euler Gram")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_k0)

    p = sub.add_parser("verify-rr", parents=[common], help="compare the complements on Y_d and X_{4d+2}")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_verify_rr)

    p = sub.add_parser("sod", parents=[common], help="right orthogonal of a distinguished collection")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--collection", choices=["lines", "mukai"])
    p.set_defaults(func=cmd_sod)

    p = sub.add_parser("bundle", parents=[common], help="rank 2 bundle numerology")
    p.add_argument("side", choices=["index1", "index2"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("coincidence", parents=[common], help="compare both numerologies")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_coincidence)

    p = sub.add_parser("isometry", parents=[common], help="bounded search for lattice isometries")
    p.add_argument("--g1", required=True, help="BilinearLattice JSON {rank, gram}")
    p.add_argument("--g2", required=True, help="BilinearLattice JSON {rank, gram}")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("ak", parents=[common], help="AK-compatibility from pairing data")
    p.add_argument("--input", required=True, help="PairingData JSON {n, ranks, pairings}")
    p.set_defaults(func=cmd_ak)
    return parser


def run(argv: list[str] | None = None) -> tuple[CommandResult, argparse.Namespace | None]:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args), args
    except (UsageError, ClassificationError, ValueError) as exc:
        return CommandResult(EXIT_USAGE, error=str(exc)), None


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if not argv:
        build_parser().print_help(sys.stderr)
        return EXIT_USAGE
    res, args = run(argv)
    if res.exit_code == EXIT_USAGE:
        print(f"fano-k0: error: {res.error}", file=sys.stderr)
        return res.exit_code
    if not args.quiet:
        print(res.dumps() if args.json else res.rendered)
    if res.exit_code == EXIT_CHECK and not args.json:
        print(res.dumps(), file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
