"""Command-line front end: construct groups, compute spectra, classify, verify, census."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import in_A_k, in_G_k
from .classify import report_to_dict as membership_to_dict
from .groups import FiniteGroup, construct, from_table, parse_word, to_document
from .spectra import SpectrumReport, is_integral_cayley
from .spectra import report_to_dict as spectrum_to_dict
from .verify import list_claims, result_to_dict, run_all


class CliError(Exception):
    """Input or usage problem that maps to exit status 2."""


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _worker_cap() -> int:
    """Validate INTEGRA_THREADS; scans run sequentially, the cap just bounds them."""
    raw = os.environ.get("INTEGRA_THREADS", "")
    if not raw:
        return 1
    try:
        val = int(raw)
    except ValueError:
        raise CliError(f"INTEGRA_THREADS must be a positive integer, got {raw!r}")
    if val < 1:
        raise CliError(f"INTEGRA_THREADS must be a positive integer, got {raw!r}")
    return val


def _load_group(args: argparse.Namespace) -> FiniteGroup:
    if getattr(args, "spec", None):
        return construct(args.spec)
    path = Path(args.file)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: not valid JSON: {exc}")
    return from_table(doc, label=path.name)


def _resolve_set(g: FiniteGroup, args: argparse.Namespace) -> tuple[int, ...]:
    if args.set_indices:
        try:
            return tuple(int(tok) for tok in args.set_indices.split(",") if tok.strip())
        except ValueError:
            raise CliError(f"bad --set-indices value: {args.set_indices!r}")
    return tuple(parse_word(g, w) for w in args.set_words.split(",") if w.strip())


def _spectrum_table(rep: SpectrumReport, out) -> None:
    verdict = "integral" if rep.integral else "non-integral"
    print(
        f"n={rep.n} degree={rep.degree} {verdict} components={rep.components} "
        f"subgroup_order={rep.subgroup_order} index={rep.index}",
        file=out,
    )
    eig = ", ".join(f"{v} (x{m})" for v, m in rep.eigenvalues)
    print(f"integer eigenvalues: {eig if eig else 'none'}", file=out)
    if not rep.integral:
        print(f"residual factor: {rep.residual}", file=out)


def _cmd_construct(args: argparse.Namespace) -> int:
    g = construct(args.spec)
    text = _canonical(to_document(g)) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load_group(args)
    s = _resolve_set(g, args)
    ok, rep = is_integral_cayley(g, s)
    if args.json:
        print(_canonical(spectrum_to_dict(rep)))
    if args.table:
        _spectrum_table(rep, sys.stderr)
    return 0 if ok else 1


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _load_group(args)
    rep = in_A_k(g, args.k) if args.cls == "A" else in_G_k(g, args.k)
    if args.json:
        print(_canonical(membership_to_dict(rep)))
    if args.table:
        verdict = "member" if rep.member else "non-member"
        extra = " (vacuous)" if rep.vacuous else ""
        print(
            f"{rep.group_id}: {rep.cls}_{rep.k} {verdict}{extra}, "
            f"{rep.sets_checked} sets checked",
            file=sys.stderr,
        )
        if rep.witness_words:
            print(f"witness: {{{', '.join(rep.witness_words)}}}", file=sys.stderr)
    return 0 if rep.member else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    claim_filter = None if args.all else args.claim
    summary = run_all(claim_filter)
    if claim_filter is not None and not summary.results:
        raise CliError(f"no claims match: {claim_filter}")
    if args.json:
        print(_canonical([result_to_dict(r) for r in summary.results]))
    if args.table:
        described = {c.id: c.description for c in list_claims()}
        for r in summary.results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.id:<4} {status}  {r.elapsed:7.2f}s  {described[r.id]}", file=sys.stderr)
        print(f"{summary.passed}/{len(summary.results)} claims passed", file=sys.stderr)
    return 0 if summary.ok else 1


def _cmd_census(args: argparse.Namespace) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise CliError(f"not a directory: {args.dir}")
    reports = []
    rows = []
    all_member = True
    for path in sorted(root.glob("*.json")):
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise CliError(f"{path}: not valid JSON: {exc}")
        g = from_table(doc, label=path.name)
        for cls in ("A", "G"):
            rep = in_A_k(g, args.k) if cls == "A" else in_G_k(g, args.k)
            reports.append(membership_to_dict(rep))
            rows.append(rep)
            all_member = all_member and rep.member
    if args.json:
        print(_canonical(reports))
    if args.table:
        for rep in rows:
            verdict = "member" if rep.member else "non-member"
            print(f"{rep.group_id}: {rep.cls}_{rep.k} {verdict}", file=sys.stderr)
    return 0 if all_member else 1


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit canonical JSON on stdout")
    p.add_argument("--table", action="store_true", help="emit a readable table on stderr")


def _add_group_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="construction spec, e.g. 'dic(cyclic:6)'")
    src.add_argument("--file", help="path to a group document in ftg-1 format")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="integra",
        description="Exact integral-spectrum toolkit for Cayley graphs over finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a group and emit its ftg-1 document")
    p.add_argument("--spec", required=True, help="construction spec, e.g. 'dic(cyclic:6)'")
    p.add_argument("--out", help="write the document here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectrum", help="exact spectrum report for one connection set")
    _add_group_source(p)
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--set-indices", help="comma-separated element indices")
    sel.add_argument("--set-words", help="comma-separated generator words, e.g. 'a^2,a^3*b,b'")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("classify", help="A_k or G_k membership by exhaustive scan")
    _add_group_source(p)
    p.add_argument("--class", dest="cls", choices=("A", "G"), required=True)
    p.add_argument("--k", type=int, required=True, help="valency bound, at least 1")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the claims catalog")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", help="run every claim")
    which.add_argument("--claim", help="claim id, exact match first, then prefix")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="classify every ftg-1 file in a directory")
    p.add_argument("--dir", required=True, help="directory of ftg-1 JSON files")
    p.add_argument("--k", type=int, required=True, help="valency bound, at least 1")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "json") and not args.json and not args.table:
        args.json = True
        if args.command == "verify":
            args.table = True
    try:
        _worker_cap()
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
