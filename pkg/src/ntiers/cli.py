"""Command-line front end: ``ntiers {transform,validate,inspect,diff,scaffold}``.

Exit codes: 0 success, 1 model validation failure (or a non-empty diff),
2 read/parse/usage/IO failure. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .diff import diff
from .errors import DocumentError, KindMismatchError, NtiersError, ScaffoldIOError, TemplateError, UnresolvedPathError
from .metamodel import CrudProjectPackage, ValidationReport, validate_psm
from .scaffold import TemplateSet, emit_scaffold
from .transform import transform
from .xmi import load_model, load_pim, load_psm, serialize_psm

EXIT_OK, EXIT_INVALID, EXIT_FAILURE = 0, 1, 2


class _Failure(Exception):
    """Aborts a command with exit code 2."""


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _report(report: ValidationReport) -> int:
    for d in report:
        _err(d.format())
    return EXIT_OK if report.ok else EXIT_INVALID


def _read(loader, path, **kwargs):
    try:
        return loader(path, **kwargs)
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc.strerror or exc}") from None
    except (DocumentError, UnresolvedPathError) as exc:
        raise _Failure(f"{path}: {exc.code}: {exc}") from None


def _counts(psm: CrudProjectPackage) -> list[tuple[str, list[str]]]:
    dp, bp = psm.dao_package, psm.business_package
    groups = [
        ("pojos", dp.pojos), ("daos", dp.daos), ("daoimpls", dp.daoimpls),
        ("dtos", bp.dtos), ("services", bp.services), ("serviceimpls", bp.serviceimpls),
        ("pages", psm.pages), ("actions", psm.actions), ("forms", psm.forms),
    ]
    return [(label, [e.name for e in elements]) for label, elements in groups]


def cmd_transform(args) -> int:
    pim = _read(load_pim, args.input, strict=False)
    if not pim.validation.ok:
        return _report(pim.validation)
    psm, trace = transform(pim)
    text = serialize_psm(psm, full=not args.fig9_compat)
    try:
        Path(args.output).write_text(text, encoding="utf-8")
        if args.trace:
            trace.write(args.trace)
    except OSError as exc:
        raise _Failure(f"cannot write output: {exc}") from None
    print(f"classes: {len(pim.classes)}")
    for label, names in _counts(psm):
        print(f"{label}: {len(names)}")
    if args.trace:
        print(f"trace links: {len(trace)}")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.kind == "pim":
        return _report(_read(load_pim, args.input, strict=False).validation)
    return _report(validate_psm(_read(load_psm, args.input)))


def cmd_inspect(args) -> int:
    psm = _read(load_psm, args.input)
    print(f"name: {psm.name}")
    for label, names in _counts(psm):
        print(f"{label}: {len(names)}")
        for name in names:
            print(f"  {name}")
    return EXIT_OK


def cmd_diff(args) -> int:
    a = _read(load_model, args.a)
    b = _read(load_model, args.b)
    try:
        result = diff(a, b, order_sensitive=not args.order_insensitive)
    except KindMismatchError as exc:
        raise _Failure(str(exc)) from None
    for entry in result:
        print(entry.format())
    return EXIT_OK if result.empty else EXIT_INVALID


def cmd_scaffold(args) -> int:
    psm = _read(load_psm, args.input)
    report = validate_psm(psm)
    if not report.ok:
        return _report(report)
    try:
        templates = TemplateSet.from_directory(args.templates) if args.templates else TemplateSet()
        manifest = emit_scaffold(psm, templates, args.out_dir)
    except (TemplateError, ScaffoldIOError, OSError) as exc:
        raise _Failure(str(exc)) from None
    sys.stdout.write(manifest.dumps())
    print(f"files: {len(manifest)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ntiers", description="Compile UML class models into N-tiers CRUD models.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a UML package document into an N-tiers model")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--trace", help="write the rule-application trace (JSON lines) here")
    p.add_argument("--fig9-compat", action="store_true", help="write name-and-reference elements only")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("validate", help="validate a model document")
    p.add_argument("input")
    p.add_argument("--kind", choices=("pim", "psm"), default="pim")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("inspect", help="list the contents of an N-tiers model")
    p.add_argument("input")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("diff", help="structural diff of two models of the same kind")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--order-insensitive", action="store_true")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("scaffold", help="emit stub files for an N-tiers model")
    p.add_argument("input")
    p.add_argument("out_dir")
    p.add_argument("--templates", help="directory of <kind>.tmpl files overriding the defaults")
    p.set_defaults(func=cmd_scaffold)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as exc:
        _err(f"error: {exc}")
        return EXIT_FAILURE
    except NtiersError as exc:
        _err(f"error: {exc.code}: {exc}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
