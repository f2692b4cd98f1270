"""Command-line front end: compute constructions, export closures, run verification suites.

Exit codes: 0 success, 1 a verification or internal consistency failure,
2 bad usage or invalid input, 3 an enumeration bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from ._validation import BoundExceededError, InvalidInputError, check_bound
from .oracle import SUITES, hasse_graph, hasse_to_dict, hasse_to_dot, run_verification
from .partitions import codim_in_nilradical
from .richardson import (
    SimpleRootSubset,
    chains_from_subset,
    closure_members,
    descendants,
    psi_subset,
    richardson_tableau,
    richardson_word,
)
from .tableaux import Tableau, format_ascii, project, psi_tableau, rs_tableau, tau_tableau
from .words import Word, psi_word

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

log = logging.getLogger("orbk")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbk",
        description="Orbital varieties in sl_n: Richardson tableaux, descendants and brute-force checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, help="rank parameter: work in sl_n")
    common.add_argument("--subset", type=_int_list, default=None, help='simple-root indices, e.g. "1,3,4"')
    common.add_argument("--format", choices=("json", "ascii", "dot"), default="ascii")
    common.add_argument("--bound", type=_positive, default=None, help="largest n allowed for exhaustive enumeration")
    common.add_argument("--input", type=Path, help="read a tableau or subset from a JSON file")
    common.add_argument("--output", type=Path, help="write the result here instead of stdout")

    sub.add_parser("tableau", parents=[common], help="Richardson tableau T_I with its chains")
    p = sub.add_parser("word", parents=[common], help="w_I, or the insertion tableau of --word")
    p.add_argument("--word", type=_int_list, default=None)
    sub.add_parser("closure", parents=[common], help="all tableaux whose variety lies in the closure of V_I")
    sub.add_parser("descendants", parents=[common], help="the descendants of T_I with shapes and codimensions")
    p = sub.add_parser("psi", parents=[common], help="apply the diagram involution to a word, tableau or T_I")
    p.add_argument("--word", type=_int_list, default=None)
    p = sub.add_parser("project", parents=[common], help="project a tableau onto the interval [lo, hi]")
    p.add_argument("--lo", type=_positive, required=True)
    p.add_argument("--hi", type=_positive, required=True)
    p = sub.add_parser("verify", parents=[common], help="run brute-force verification suites up to --n")
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="repeat to select several")
    p.add_argument("--jobs", type=_positive, default=1)
    sub.add_parser("hasse", parents=[common], help="Hasse diagram of the Duflo-certified order on the closure")
    return parser


# -- argument resolution ----------------------------------------------------


def _read_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from None


def _subset(args) -> SimpleRootSubset:
    if args.input is not None:
        data = _read_json(args.input)
        if isinstance(data, dict) and "I" in data:
            return SimpleRootSubset.from_dict(data)
    if args.n is None:
        raise UsageError("--n is required")
    return SimpleRootSubset.of(args.n, args.subset or [])


def _tableau(args) -> Tableau | None:
    if args.input is None:
        return None
    data = _read_json(args.input)
    if isinstance(data, dict) and "rows" in data:
        return Tableau.from_dict(data)
    if isinstance(data, list):
        return Tableau(tuple(tuple(r) for r in data))
    return None


# -- rendering --------------------------------------------------------------


def _rows(T: Tableau) -> list[list[int]]:
    return [list(r) for r in T.rows]


def _label(T: Tableau) -> str:
    return "".join("(" + ",".join(map(str, r)) + ")" for r in T.rows)


def _render_tableaux(entries: list[dict], fmt: str, header: str) -> str:
    if fmt == "json":
        return json.dumps({"header": header, "tableaux": entries}, indent=2)
    blocks = [header]
    for e in entries:
        extra = ", ".join(f"{k}={v}" for k, v in e.items() if k != "rows")
        blocks.append(f"{_label(Tableau.from_dict(e))}  {extra}".rstrip())
        blocks.append(format_ascii(Tableau.from_dict(e)))
    return "\n".join(blocks)


def _entry(T: Tableau, I: SimpleRootSubset | None = None) -> dict:
    e = {"rows": _rows(T), "shape": list(T.shape)}
    if I is not None:
        e["codim"] = codim_in_nilradical(T, chains_from_subset(I).chains)
    return e


def _require_ascii_or_json(args) -> None:
    if args.format == "dot" and args.command != "hasse":
        raise UsageError("--format dot is only available for the hasse command")


# -- commands ---------------------------------------------------------------


def cmd_tableau(args) -> tuple[int, str]:
    I = _subset(args)
    T = richardson_tableau(I)
    chains = chains_from_subset(I)
    if args.format == "json":
        return EXIT_OK, json.dumps(
            {**I.to_dict(), "rows": _rows(T), "chains": [list(c) for c in chains.chains],
             "lengths": list(chains.lengths), "maxima": list(chains.maxima)},
            indent=2,
        )
    text = "\n".join([
        f"T_I for n={I.n}, I={sorted(I.indices)}",
        f"chains: {[list(c) for c in chains.chains]}",
        format_ascii(T),
    ])
    return EXIT_OK, text


def cmd_word(args) -> tuple[int, str]:
    if args.word:
        w = Word(tuple(args.word))
        T = rs_tableau(w)
        payload = {"word": list(w), "rows": _rows(T), "shape": list(T.shape)}
        if w.is_permutation():
            payload["tau"] = sorted(tau_tableau(T))
        if args.format == "json":
            return EXIT_OK, json.dumps(payload, indent=2)
        return EXIT_OK, f"word {list(w)}\n{format_ascii(T)}"
    I = _subset(args)
    w = richardson_word(I)
    if args.format == "json":
        return EXIT_OK, json.dumps({**I.to_dict(), "word": list(w)})
    return EXIT_OK, " ".join(map(str, w))


def cmd_closure(args) -> tuple[int, str]:
    I = _subset(args)
    check_bound(I.n, args.bound)
    members = closure_members(I, bound=args.bound)
    entries = [_entry(T, I) for T in members]
    return EXIT_OK, _render_tableaux(entries, args.format, f"closure of V_I, n={I.n}, I={sorted(I.indices)}: {len(entries)} members")


def cmd_descendants(args) -> tuple[int, str]:
    I = _subset(args)
    D = sorted(descendants(I), key=Tableau.sort_key)
    entries = [_entry(T, I) for T in D]
    return EXIT_OK, _render_tableaux(entries, args.format, f"descendants of T_I, n={I.n}, I={sorted(I.indices)}: {len(entries)}")


def cmd_psi(args) -> tuple[int, str]:
    if args.word:
        if args.n is None:
            raise UsageError("--n is required with --word")
        w = psi_word(args.word, args.n)
        if args.format == "json":
            return EXIT_OK, json.dumps({"word": list(w)})
        return EXIT_OK, " ".join(map(str, w))
    T = _tableau(args)
    if T is not None:
        out = psi_tableau(T)
        return EXIT_OK, out.to_json() if args.format == "json" else format_ascii(out)
    I = _subset(args)
    J = psi_subset(I)
    out = psi_tableau(richardson_tableau(I))
    if args.format == "json":
        return EXIT_OK, json.dumps({"subset": J.to_dict(), "rows": _rows(out)}, indent=2)
    return EXIT_OK, f"psi(I) = {sorted(J.indices)}\n{format_ascii(out)}"


def cmd_project(args) -> tuple[int, str]:
    T = _tableau(args)
    if T is None:
        T = richardson_tableau(_subset(args))
    out = project(T, args.lo, args.hi)
    return EXIT_OK, out.to_json() if args.format == "json" else format_ascii(out)


def cmd_verify(args) -> tuple[int, str]:
    if args.n is None:
        raise UsageError("--n is required (largest rank to check)")
    reports = run_verification(args.n, suites=args.suite, jobs=args.jobs, bound=args.bound)
    failed = [r for r in reports if not r.ok]
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2)
    else:
        lines = [r.summary() for r in reports]
        lines.append(f"{len(reports) - len(failed)}/{len(reports)} suites passed")
        for r in failed:
            lines.append(json.dumps(r.to_dict()))
        text = "\n".join(lines)
    return (EXIT_VIOLATION if failed else EXIT_OK), text


def cmd_hasse(args) -> tuple[int, str]:
    I = _subset(args)
    H = hasse_graph(I, bound=args.bound)
    if args.format == "dot":
        return EXIT_OK, hasse_to_dot(H)
    if args.format == "json":
        return EXIT_OK, json.dumps(hasse_to_dict(H), indent=2)
    lines = [f"{len(H)} members, {H.number_of_edges()} covers"]
    for S, T in sorted(H.edges, key=lambda e: (e[0].sort_key(), e[1].sort_key())):
        mark = " *" if H.edges[S, T]["highlight"] else ""
        lines.append(f"{_label(S)} -> {_label(T)}{mark}")
    return EXIT_OK, "\n".join(lines)


COMMANDS = {
    "tableau": cmd_tableau,
    "word": cmd_word,
    "closure": cmd_closure,
    "descendants": cmd_descendants,
    "psi": cmd_psi,
    "project": cmd_project,
    "verify": cmd_verify,
    "hasse": cmd_hasse,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        _require_ascii_or_json(args)
        code, text = COMMANDS[args.command](args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InvalidInputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.output is not None:
        args.output.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
