import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from conditions.utils import full_report
from config import DEFAULT_SEED, ENTRY_TOLERANCE, LOG_LEVEL, SEARCH_WORKERS
from constructor.utils import (
    basis_product_bound,
    construct,
    corollary_bound,
    feasibility,
)
from eigen.utils import is_doubly_stochastic, sym_eigenvalues
from errors import (
    DimensionError,
    MatrixFormatError,
    RealizerError,
    SpectrumError,
)
from randomgen.schemas import Distribution, GenConfig
from randomgen.utils import generate_batch
from rw_basis.utils import build_basis
from search.utils import bracket_delta_min, separating_examples
from spectrum.schemas import Spectrum
from spectrum.utils import format_spectrum, parse_spectrum, read_spectra
from utils.logger import setup_logging
from utils.matrix_io import read_matrix, to_payload, write_matrix

logger = logging.getLogger("realizer.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# ошибки ввода: код 2; прочие доменные ошибки: код 1
USAGE_ERRORS = (
    SpectrumError,
    DimensionError,
    MatrixFormatError,
    ValidationError,
    OSError,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, "
                                         f"got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, "
                                         f"got {text}")
    return value


def _dump(document) -> str:
    return json.dumps(document, indent=2, allow_nan=False)


def _print_json(document):
    print(_dump(document))


def _write_json(path: str, document):
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as f:
        f.write(_dump(document) + "\n")


def _format_rows(entries: np.ndarray) -> List[str]:
    return [" ".join(f"{value:10.6f}" for value in row) for row in entries]


def _indexed(path: str, index: int, total: int) -> Path:
    path = Path(path)
    if total == 1:
        return path
    return path.with_name(f"{path.stem}_{index}{path.suffix}")


def _load_spectra(args) -> List[Spectrum]:
    if args.spectrum is not None:
        return [parse_spectrum(args.spectrum)]
    return read_spectra(args.spectrum_file)


def _entry_tol(args) -> float:
    return args.tol if args.tol is not None else ENTRY_TOLERANCE


def cmd_construct(args) -> int:
    spectra = _load_spectra(args)
    tol = _entry_tol(args)
    documents = []
    status = EXIT_OK

    for index, spectrum in enumerate(spectra):
        certificate = feasibility(spectrum, tol)
        if not certificate.feasible:
            logger.warning(
                f"Constructed matrix is not doubly stochastic: entry "
                f"({certificate.witness_k},{certificate.witness_l}) = "
                f"{certificate.witness_value:.6e} | "
                f"spectrum={format_spectrum(spectrum)}"
            )
            if args.strict:
                logger.error("Infeasible spectrum rejected (--strict)")
                status = EXIT_FAILURE
                continue

        matrix = construct(spectrum)
        document = {
            "spectrum": list(spectrum.values),
            "feasibility": certificate.model_dump(mode="json"),
            "corollary": corollary_bound(spectrum).value,
        }
        if args.out:
            target = write_matrix(
                matrix, _indexed(args.out, index, len(spectra)), args.format,
                tol=tol,
            )
            document["out"] = str(target)
        else:
            document["matrix"] = to_payload(matrix, tol).model_dump()
        documents.append(document)

        if not args.json:
            verdict = "feasible" if certificate.feasible else "INFEASIBLE"
            print(f"n={spectrum.n} {verdict} "
                  f"min_entry={certificate.min_entry:.6f} "
                  f"corollary={document['corollary']}")
            if args.out:
                print(f"written {document['out']}")
            else:
                print("\n".join(_format_rows(matrix.exported(tol))))

    if args.json:
        _print_json(documents[0] if len(spectra) == 1 and documents
                    else documents)
    return status


def cmd_check(args) -> int:
    reports = [full_report(s) for s in _load_spectra(args)]
    documents = [report.model_dump(mode="json") for report in reports]
    document = documents[0] if args.spectrum is not None else documents

    if args.out:
        _write_json(args.out, document)
    if args.json:
        _print_json(document)
        return EXIT_OK

    for report in reports:
        print(f"n={report.n} delta={report.classification.delta:.6f} "
              f"suleimanova={report.classification.is_suleimanova}")
        print(f"{'condition':<28} {'applicable':<11} {'lhs':>12}  verdict")
        for verdict in report.conditions:
            lhs = (f"{verdict.lhs_value:12.6f}" if verdict.applicable
                   else f"{'-':>12}")
            outcome = ("-" if not verdict.applicable
                       else "pass" if verdict.satisfied else "fail")
            print(f"{verdict.name:<28} {str(verdict.applicable):<11} "
                  f"{lhs}  {outcome}")
        feasible = report.feasibility
        print(f"{'corollary':<28} {report.corollary.value}")
        print(f"{'construction':<28} "
              f"{'feasible' if feasible.feasible else 'infeasible'} "
              f"(min entry {feasible.min_entry:.6f})")
    return EXIT_OK


def cmd_verify(args) -> int:
    entries = read_matrix(args.input)
    report = is_doubly_stochastic(entries, _entry_tol(args))
    eigenvalues = sym_eigenvalues(entries) if report.symmetric_ok else None
    document = {
        "report": report.model_dump(mode="json"),
        "eigenvalues": eigenvalues,
    }

    if args.out:
        _write_json(args.out, document)
    if args.json:
        _print_json(document)
    else:
        print(f"doubly stochastic: {'pass' if report.passed else 'fail'}")
        for field in ("symmetric_ok", "nonneg_ok", "rowsum_ok", "colsum_ok"):
            print(f"  {field:<14} {getattr(report, field)}")
        print(f"  min_entry      {report.min_entry:.6f}")
        print(f"  max_rowsum_dev {report.max_rowsum_dev:.3e}")
        if eigenvalues is not None:
            print("eigenvalues: "
                  + ", ".join(f"{v:.6f}" for v in eigenvalues))

    if not report.passed:
        logger.error(f"{args.input}: matrix is not doubly stochastic")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_basis(args) -> int:
    basis = build_basis(args.n)
    bound = basis_product_bound(basis.q)
    gram_error = float(np.max(np.abs(basis.q.T @ basis.q - np.eye(args.n))))
    extra = {
        "eigvals": basis.eigvals.tolist(),
        "product_bound": bound,
    }
    document = {"n": args.n, "orthonormality_error": gram_error, **extra}

    if args.out:
        document["out"] = str(
            write_matrix(basis.q, args.out, "json", extra=extra)
        )
    else:
        document["q"] = to_payload(basis.q).model_dump()

    if args.json:
        _print_json(document)
    else:
        print(f"n={args.n} max|Q^T Q - I|={gram_error:.3e} "
              f"product_bound={bound:.6f}")
        if args.out:
            print(f"written {document['out']}")
        else:
            print("\n".join(_format_rows(basis.q)))
    return EXIT_OK


def cmd_random(args) -> int:
    if args.out and args.count > 1:
        raise MatrixFormatError("--out takes a single matrix; "
                                "use --out-dir with --count > 1")
    cfg = GenConfig(
        n=args.n,
        alpha=args.alpha,
        seed=args.seed,
        distribution=args.distribution,
    )
    fmt = args.format or "json"
    tol = _entry_tol(args)
    documents = []
    for index, (spectrum, matrix) in enumerate(generate_batch(cfg,
                                                              args.count)):
        document = {"stream": index, "values": list(spectrum.values)}
        extra = {"values": document["values"], "seed": cfg.seed,
                 "stream": index}
        if args.out_dir:
            target = Path(args.out_dir) / f"matrix_{index:04d}.{fmt}"
            document["out"] = str(
                write_matrix(matrix, target, fmt, extra, tol)
            )
        elif args.out:
            document["out"] = str(
                write_matrix(matrix, args.out, args.format, extra, tol)
            )
        else:
            document["matrix"] = to_payload(matrix, tol).model_dump()
        documents.append(document)

        if not args.json:
            print(f"[{index}] {format_spectrum(spectrum)}")
            if "out" in document:
                print(f"written {document['out']}")
            else:
                print("\n".join(_format_rows(matrix.exported())))

    if args.json:
        _print_json(documents)
    return EXIT_OK


def cmd_delta_min(args) -> int:
    probes = [parse_spectrum(text) for text in args.probe]
    bracket = bracket_delta_min(
        args.n, args.trials, args.seed, probes=probes, workers=args.workers
    )
    document = bracket.model_dump(mode="json")

    if args.out:
        _write_json(args.out, document)
    if args.json:
        _print_json(document)
        return EXIT_OK

    print(f"n={bracket.n} trials={bracket.trials} seed={bracket.seed}")
    print(f"delta_min in [{bracket.lower:.6f}, {bracket.upper:.6f}]")
    if bracket.heuristic_upper is not None:
        print(f"heuristic (unproven) upper: {bracket.heuristic_upper:.6f}")
    if bracket.found:
        certificate = bracket.witness_certificate
        print(f"witness: {format_spectrum(bracket.witness_spectrum)}")
        print(f"negative entry ({certificate.witness_k},"
              f"{certificate.witness_l}) = {certificate.witness_value:.6e}")
    else:
        print("no infeasible spectrum found")
    return EXIT_OK


def cmd_separate(args) -> int:
    examples = separating_examples(args.n, args.trials, args.seed,
                                   limit=args.limit)
    document = [list(s.values) for s in examples]

    if args.out:
        _write_json(args.out, document)
    if args.json:
        _print_json(document)
    else:
        print(f"found {len(examples)} separating spectra "
              f"(n={args.n}, trials={args.trials}, seed={args.seed})")
        for spectrum in examples:
            print(format_spectrum(spectrum))
    return EXIT_OK


def _add_spectrum_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--spectrum",
                        help='comma-separated list, e.g. "1,-0.1,-0.4"')
    source.add_argument("--spectrum-file",
                        help="file with one spectrum per line")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable JSON on stdout")
    common.add_argument("--tol", type=_positive_float, default=None,
                        help="entry tolerance of the non-negativity check "
                             f"(env ENTRY_TOLERANCE, default "
                             f"{ENTRY_TOLERANCE})")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="master seed (env DEFAULT_SEED)")
    common.add_argument("--out", help="output file")

    parser = argparse.ArgumentParser(
        prog="realizer",
        description="Symmetric doubly stochastic matrices with prescribed "
                    "spectra. Spectra are zero-based: the first value is "
                    "the Perron eigenvalue 1.",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="build P(Λ) = QΛQ^T for a spectrum")
    _add_spectrum_source(p)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 instead of emitting an infeasible matrix")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("check", parents=[common],
                       help="evaluate the classical sufficient conditions")
    _add_spectrum_source(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", parents=[common],
                       help="check a matrix file for double stochasticity")
    p.add_argument("--in", dest="input", required=True,
                   help="matrix JSON or CSV")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("basis", parents=[common],
                       help="orthonormal eigenbasis of the cycle walk")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_basis)

    p = sub.add_parser("random", parents=[common],
                       help="random doubly stochastic matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--out-dir")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--distribution", type=Distribution,
                   choices=list(Distribution), default=Distribution.UNIFORM)
    p.set_defaults(handler=cmd_random)

    p = sub.add_parser("delta-min", parents=[common],
                       help="randomized bracket of delta_min for fixed n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive_int, default=10_000)
    p.add_argument("--workers", type=_positive_int, default=SEARCH_WORKERS)
    p.add_argument("--probe", action="append", default=[],
                   help="spectrum evaluated before the random trials")
    p.set_defaults(handler=cmd_delta_min)

    p = sub.add_parser("separate", parents=[common],
                       help="spectra the construction realizes but no "
                            "classical condition covers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive_int, default=1_000)
    p.add_argument("--limit", type=_positive_int, default=None)
    p.set_defaults(handler=cmd_separate)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Точка входа CLI. Коды возврата: 0 -- успех, 1 -- доменная ошибка
    (недопустимый спектр при --strict, матрица не двояко стохастична,
    нет сходимости), 2 -- ошибка ввода или флагов.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(level=args.log_level.upper())
    logger.info(f"Command started: {args.command}")
    try:
        code = args.handler(args)
    except USAGE_ERRORS as exc:
        logger.error(f"{args.command}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RealizerError as exc:
        logger.error(f"{args.command}: {type(exc).__name__}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    logger.info(f"Command finished: {args.command} (exit {code})")
    return code
