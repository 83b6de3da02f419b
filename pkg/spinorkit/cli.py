"""``spinorkit`` command line.

    spinorkit classify 3 1
    spinorkit table --family hyperbolic --format csv
    spinorkit spin boost --signature 3,1 --beta 0.5 --axis 1 --time-first
"""
import argparse
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import __version__
from .checks import SUITES, run_checks
from .classify import classify_complex, classify_even, classify_real, spinor_types
from .config import DEFAULT_SETTINGS, Settings
from .errors import SpinorKitError
from .geometry import (
    connection_from_json,
    dirac_operator,
    frame_from_json,
    spinor_field_from_json,
    spinor_field_to_csv,
    spinor_field_to_json,
)
from .gamma import build_representation
from .oracle import classify_structural
from .signature import Signature, relabel_time_first
from .spin_group import boost, chi, rotation
from .standard_model import audit_to_markdown, hypercharge_audit
from .tables import FAMILIES, generate_table, to_csv, to_json, to_markdown

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s:%(lineno)d | %(message)s"


class UsageError(Exception):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so ``run`` can report exit code 2."""

    def error(self, message):
        raise UsageError(message, self.format_usage())

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "", self.format_usage())
        if message:
            sys.stderr.write(message)
        raise _EarlyExit()


class _EarlyExit(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


def _common(parser: argparse.ArgumentParser, formats: Sequence[str] = ("json",)):
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--tolerance", type=float, default=None)
    parser.add_argument("--max-n", dest="max_n", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--verbose", "-v", action="store_true")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinorkit", description="Clifford algebras, spinors and spin groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    classify = commands.add_parser("classify", help="matrix-algebra type of C(p,q)")
    classify.add_argument("p", type=int)
    classify.add_argument("q", type=int)
    classify.add_argument("--structural", action="store_true", help="also run the structural oracle")
    _common(classify)

    table = commands.add_parser("table", help="Euclidean or hyperbolic classification table")
    table.add_argument("--min", dest="n_min", type=int, default=4)
    table.add_argument("--max", dest="n_max", type=int, default=11)
    table.add_argument("--family", choices=FAMILIES, default="euclidean")
    _common(table, ("md", "csv", "json"))

    rep = commands.add_parser("rep", help="gamma matrices, chirality and conjugation")
    rep.add_argument("p", type=int)
    rep.add_argument("q", type=int)
    _common(rep)

    spin = commands.add_parser("spin", help="spin group elements and χ(s)")
    spin_commands = spin.add_subparsers(dest="spin_command", parser_class=_Parser)
    spin_commands.required = True
    spin_boost = spin_commands.add_parser("boost")
    spin_boost.add_argument("--signature", type=Signature.parse, default=Signature(3, 1))
    spin_boost.add_argument("--beta", type=float, required=True)
    spin_boost.add_argument("--axis", type=int, required=True)
    spin_boost.add_argument("--time-first", dest="time_first", action="store_true")
    _common(spin_boost)
    spin_rotate = spin_commands.add_parser("rotate")
    spin_rotate.add_argument("--signature", type=Signature.parse, default=Signature(3, 1))
    spin_rotate.add_argument("--theta", type=float, required=True)
    spin_rotate.add_argument("--plane", type=_pair, required=True)
    spin_rotate.add_argument("--time-first", dest="time_first", action="store_true")
    _common(spin_rotate)

    dirac = commands.add_parser("dirac", help="lattice Dirac operator")
    dirac_commands = dirac.add_subparsers(dest="dirac_command", parser_class=_Parser)
    dirac_commands.required = True
    apply = dirac_commands.add_parser("apply")
    apply.add_argument("--frame", required=True)
    apply.add_argument("--conn", required=True)
    apply.add_argument("--psi", required=True)
    _common(apply, ("json", "csv"))

    sm = commands.add_parser("sm", help="Standard Model fermion audits")
    sm_commands = sm.add_subparsers(dest="sm_command", parser_class=_Parser)
    sm_commands.required = True
    hypercharges = sm_commands.add_parser("hypercharges")
    _common(hypercharges, ("md", "json"))

    check = commands.add_parser("check", help="run the cross-validation suites")
    check.add_argument("--suite", action="append", choices=SUITES, dest="suites")
    check.add_argument("--jobs", type=int, default=None)
    _common(check)
    return parser


def _pair(text: str):
    parts = [part for part in text.replace(" ", ",").split(",") if part]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated indices, got {text!r}")
    return int(parts[0]), int(parts[1])


def _settings(args) -> Settings:
    changes = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.tolerance is not None:
        changes["tolerance"] = args.tolerance
    if args.trials is not None:
        changes["trials"] = args.trials
    if args.max_n is not None:
        changes["max_concrete_n"] = args.max_n
        changes["max_oracle_n"] = args.max_n
    try:
        return dataclasses.replace(DEFAULT_SETTINGS, **changes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _dumps(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def _classify(args, settings: Settings) -> str:
    sig = Signature(args.p, args.q)
    algebra, chain = classify_real(sig, settings)
    payload = {
        "p": sig.p,
        "q": sig.q,
        "type": algebra.to_json(),
        "label": str(algebra),
        "chain": chain.to_json(),
        "even": classify_even(sig, settings).to_json() if sig.n else None,
        "complex": classify_complex(sig.n, settings).to_json(),
        "spinors": spinor_types(sig, settings).to_json(),
    }
    if args.structural:
        payload["structural"] = classify_structural(sig, settings=settings).to_json()
    return _dumps(payload)


def _table(args, settings: Settings) -> str:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError(f"need 1 <= --min <= --max, got {args.n_min}..{args.n_max}")
    rows = generate_table(args.family, args.n_min, args.n_max, settings)
    if args.format == "md":
        return to_markdown(rows, args.family)
    if args.format == "csv":
        return to_csv(rows)
    return to_json(rows, args.family, settings) + "\n"


def _rep(args, settings: Settings) -> str:
    return _dumps(build_representation(Signature(args.p, args.q), settings).to_json())


def _spin(args, settings: Settings) -> str:
    sig = args.signature
    perm = relabel_time_first(sig) if args.time_first else tuple(range(sig.n))
    for label in ([args.axis] if args.spin_command == "boost" else list(args.plane)):
        if not 0 <= label < sig.n:
            raise UsageError(f"index {label} out of range for {sig}")
    if args.spin_command == "boost":
        element = boost(sig, args.beta, perm[args.axis], settings)
    else:
        mu, nu = args.plane
        element = rotation(sig, args.theta, (perm[mu], perm[nu]), settings)
    matrix = chi(element, settings=settings)
    order = list(perm)
    payload = {
        "signature": [sig.p, sig.q],
        "labels": order,
        "element": json.loads(element.value.to_json()),
        "chi": [[float(x) for x in row] for row in matrix.entries[np.ix_(order, order)]],
        "component": matrix.component.value,
    }
    return _dumps(payload)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def _dirac(args, settings: Settings) -> str:
    frame = frame_from_json(_read(args.frame))
    conn = connection_from_json(_read(args.conn))
    psi = spinor_field_from_json(_read(args.psi))
    rep = build_representation(psi.signature, settings)
    result = dirac_operator(psi, conn, frame, rep)
    if args.format == "csv":
        return spinor_field_to_csv(result)
    return spinor_field_to_json(result) + "\n"


def _sm(args, settings: Settings) -> str:
    audits = hypercharge_audit()
    if args.format == "md":
        return audit_to_markdown(audits)
    return _dumps([audit.to_json() for audit in audits])


def _check(args, settings: Settings) -> str:
    max_n = args.max_n if args.max_n is not None else 8
    results = run_checks(args.suites or SUITES, max_n, settings, args.jobs)
    payload = {
        "passed": sum(r.passed for r in results),
        "failed": sum(r.failed for r in results),
        "suites": [r.to_json() for r in results],
    }
    if payload["failed"]:
        raise _ChecksFailed(_dumps(payload))
    return _dumps(payload)


class _ChecksFailed(SpinorKitError):
    def __init__(self, payload: str):
        super().__init__("cross-validation failures, see the report on stdout")
        self.payload = payload


_HANDLERS = {
    "classify": _classify,
    "table": _table,
    "rep": _rep,
    "spin": _spin,
    "dirac": _dirac,
    "sm": _sm,
    "check": _check,
}


def run(argv: Optional[List[str]] = None) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(2, "", f"{exc.usage}spinorkit: error: {exc}\n")
    except _EarlyExit:
        return CommandResult(0, "", "")

    logging.getLogger("spinorkit").setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        settings = _settings(args)
        stdout = _HANDLERS[args.command](args, settings)
    except UsageError as exc:
        return CommandResult(2, "", f"{parser.format_usage()}spinorkit: error: {exc}\n")
    except _ChecksFailed as exc:
        return CommandResult(1, exc.payload, f"spinorkit: {exc}\n")
    except SpinorKitError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        return CommandResult(1, "", f"spinorkit: {exc}\n")
    except (OSError, ValueError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        return CommandResult(1, "", f"spinorkit: {exc}\n")
    return CommandResult(0, stdout, "")


def main(argv: Optional[List[str]] = None):
    logging.basicConfig(format=LOG_FORMAT, level=logging.WARNING)
    if argv is None:
        argv = sys.argv[1:]
    if "--verbose" in argv or "-v" in argv:
        logging.getLogger().setLevel(logging.DEBUG)
    result = run(argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
