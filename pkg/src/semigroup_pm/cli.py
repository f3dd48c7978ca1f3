"""Command-line front end.

Subcommands: compute, enumerate, certify, recover, classify, decompose,
examples, fuzz.  Exit codes are a stable scripting contract: 0 for
success or a passing check, 1 for a semantic negative (Unknown verdict,
non-unique recovery, invariant violations, corpus mismatch), 2 for input
errors (unparseable files, bad generator lists, dimension cap).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import corpus as corpus_mod
from .corpus import ExampleRecord, record_from_json
from .formats import parse_matrix
from .fuzz import ALL_SUITES, run_fuzz
from .linalg import IntMatrix, rank
from .principal import (
    PseudoRejection,
    all_principal_matrices,
    principal_matrix,
    recover_generators,
    validate_pseudo,
)
from .semigroup import GeneratorVector
from .structure import (
    block_decompose,
    certify_principal,
    classify_dim4,
    classify_dim5,
    detect_decompositions,
)

__all__ = ["JobConfig", "main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

DIM5_TYPE_LABELS = {"ThreePlusTwo": "3+2", "OnePlusTwoPlusTwo": "1+2+2"}


@dataclass
class JobConfig:
    max_dimension: int = 12
    enumeration_cap: int = 10000
    strict: bool = True
    seed: int = 0
    output_format: str = "text"


class _Out:
    """Collects output lines; optionally mirrors them into a file."""

    def __init__(self, path=None):
        self.lines: list[str] = []
        self.path = path

    def emit(self, text: str = "") -> None:
        self.lines.append(text)

    def flush(self) -> None:
        body = "\n".join(self.lines)
        if body:
            body += "\n"
        sys.stdout.write(body)
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(body)


def _config_from_args(args) -> JobConfig:
    cfg = JobConfig()
    env_cap = os.environ.get("SEMIGROUP_PM_MAX_DIM")
    if env_cap is not None:
        cfg.max_dimension = int(env_cap)
    if getattr(args, "max_dim_cap", None) is not None:
        cfg.max_dimension = args.max_dim_cap
    if getattr(args, "cap", None) is not None:
        cfg.enumeration_cap = args.cap
    if getattr(args, "lenient", False):
        cfg.strict = False
    if getattr(args, "format", None):
        cfg.output_format = args.format
    return cfg


def _parse_generators(args, cfg: JobConfig) -> GeneratorVector:
    values = list(args.generators)
    if getattr(args, "file", None):
        with open(args.file) as fh:
            values.extend(int(tok) for tok in fh.read().split())
    if not values:
        raise ValueError("no generators given")
    if len(values) > cfg.max_dimension:
        raise ValueError(
            f"{len(values)} generators exceed the dimension cap {cfg.max_dimension} "
            "(override with SEMIGROUP_PM_MAX_DIM)"
        )
    return GeneratorVector(tuple(values))


def _read_matrix(path: str, fmt: str) -> IntMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read(), fmt)


def _matrix_lines(M: IntMatrix) -> list[str]:
    return [" ".join(str(x) for x in row) for row in M.rows]


def cmd_compute(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    gens = _parse_generators(args, cfg)
    pm = principal_matrix(gens)
    r = rank(pm.matrix)
    if cfg.output_format == "json":
        out.emit(
            json.dumps(
                {
                    "generators": list(gens.values),
                    "diagonal": list(pm.diagonal),
                    "rank": r,
                    "matrix": [list(row) for row in pm.matrix.rows],
                }
            )
        )
    else:
        out.emit(f"generators: {' '.join(str(v) for v in gens.values)}")
        out.emit(f"diagonal: {' '.join(str(d) for d in pm.diagonal)}")
        out.emit(f"rank: {r}")
        out.emit("matrix:")
        out.lines.extend(_matrix_lines(pm.matrix))
    out.flush()
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    gens = _parse_generators(args, cfg)
    enum = all_principal_matrices(gens, cap=cfg.enumeration_cap)
    ranks = [rank(pm.matrix) for pm in enum]
    histogram: dict[int, int] = {}
    for r in ranks:
        histogram[r] = histogram.get(r, 0) + 1
    if cfg.output_format == "json":
        out.emit(
            json.dumps(
                {
                    "generators": list(gens.values),
                    "diagonal": list(enum.matrices[0].diagonal) if len(enum) else [],
                    "count": len(enum),
                    "truncated": enum.truncated,
                    "histogram": {str(k): v for k, v in sorted(histogram.items())},
                    "matrices": [
                        {"rank": r, "rows": [list(row) for row in pm.matrix.rows]}
                        for pm, r in zip(enum, ranks)
                    ],
                }
            )
        )
    else:
        out.emit(f"generators: {' '.join(str(v) for v in gens.values)}")
        out.emit(f"matrices: {len(enum)}" + (" (truncated)" if enum.truncated else ""))
        out.emit(
            "rank histogram: "
            + ", ".join(f"rank {k}: {v}" for k, v in sorted(histogram.items()))
        )
        for i, (pm, r) in enumerate(zip(enum, ranks), start=1):
            out.emit(f"matrix {i} (rank {r}):")
            out.lines.extend(_matrix_lines(pm.matrix))
    out.flush()
    return EXIT_OK


def cmd_certify(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    M = _read_matrix(args.matrix_file, args.matrix_format)
    cert = certify_principal(M)
    if cfg.output_format == "json":
        out.emit(
            json.dumps(
                {
                    "verdict": cert.verdict,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "detail": c.detail}
                        for c in cert.checks
                    ],
                    "recovered": list(cert.recovered) if cert.recovered else None,
                }
            )
        )
    else:
        for c in cert.checks:
            out.emit(f"{'pass' if c.passed else 'FAIL'}: {c.name} ({c.detail})")
        if cert.recovered:
            out.emit(f"recovered generators: {' '.join(str(x) for x in cert.recovered)}")
        out.emit(f"verdict: {cert.verdict}")
    out.flush()
    return EXIT_OK if cert.certified else EXIT_NEGATIVE


def cmd_recover(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    M = _read_matrix(args.matrix_file, args.matrix_format)
    checked = validate_pseudo(M, strict=cfg.strict)
    if isinstance(checked, PseudoRejection):
        raise ValueError(f"not a pseudo principal matrix: {checked.reason}")
    try:
        vec = recover_generators(M)
    except ValueError as exc:
        out.emit(str(exc))
        out.flush()
        return EXIT_NEGATIVE
    if cfg.output_format == "json":
        out.emit(json.dumps({"generators": list(vec)}))
    else:
        out.emit(" ".join(str(x) for x in vec))
    out.flush()
    return EXIT_OK


def _classification_lines(gens: GeneratorVector, cap: int, blocks_only: bool) -> list[str]:
    lines: list[str] = []
    enum = all_principal_matrices(gens, cap=cap)
    n = len(gens)
    dim4 = classify_dim4(gens, cap=cap) if n == 4 else None
    dim5 = classify_dim5(gens, cap=cap) if n == 5 else None
    for i, pm in enumerate(enum, start=1):
        r = rank(pm.matrix)
        report = block_decompose(pm.base)
        descr = f"type {report.type_string}"
        if not blocks_only:
            if dim4 is not None:
                cls = dim4[i - 1]
                if cls.case == "SimpleSplit":
                    descr = cls.detail
                elif cls.case == "PairPlusSubsemigroup":
                    descr = f"pair plus subsemigroup: {cls.detail}"
                elif cls.case == "PositiveTransposeKernel":
                    descr = f"positive transpose kernel ({cls.detail})"
                elif cls.case == "TwoPlusTwo":
                    descr = f"type 2+2: {cls.detail}"
                else:
                    descr = f"{cls.case}: {cls.detail}"
            elif dim5 is not None:
                cls = dim5[i - 1]
                label = DIM5_TYPE_LABELS.get(cls.case)
                descr = f"type {label}" if label else f"{cls.case}: {cls.detail}"
        lines.append(f"matrix {i}: rank {r}, {descr}")
        parts = " | ".join(str(p) for p in report.scaled_parts)
        if parts:
            lines.append(f"  blocks: {parts}")
        if report.residual is not None:
            lines.append(f"  mixing rows: {report.residual.n_rows}")
        lines.append(f"  permutation: {' '.join(str(p) for p in report.permutation)}")
    if enum.truncated:
        lines.append("enumeration truncated at cap")
    return lines


def cmd_classify(args, blocks_only: bool = False) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    gens = _parse_generators(args, cfg)
    if len(gens) < 3:
        raise ValueError("classification needs at least 3 generators")
    blocks_only = blocks_only or getattr(args, "blocks_only", False)
    if cfg.output_format == "json":
        enum = all_principal_matrices(gens, cap=cfg.enumeration_cap)
        payload = {
            "generators": list(gens.values),
            "truncated": enum.truncated,
            "matrices": [
                {
                    "rank": rank(pm.matrix),
                    "type": (rep := block_decompose(pm.base)).type_string,
                    "permutation": list(rep.permutation),
                    "blocks": [
                        {"scale": p.scale, "primitive": list(p.primitive.values)}
                        for p in rep.scaled_parts
                    ],
                    "rows": [list(row) for row in pm.matrix.rows],
                }
                for pm in enum
            ],
        }
        if not blocks_only:
            verdicts = detect_decompositions(gens, cap=cfg.enumeration_cap)
            payload["gluing"] = any(v.is_gluing for v in verdicts)
            payload["decompositions"] = [
                {
                    "d": v.d,
                    "e": v.e,
                    "b": list(v.b.values),
                    "c": list(v.c.values),
                    "is_gluing": v.is_gluing,
                    "is_ordinary": v.is_ordinary,
                    "is_simple_split": v.is_simple_split,
                }
                for v in verdicts
                if v.is_gluing or v.is_ordinary
            ]
        out.emit(json.dumps(payload))
        out.flush()
        return EXIT_OK
    out.emit(f"generators: {' '.join(str(v) for v in gens.values)}")
    for line in _classification_lines(gens, cfg.enumeration_cap, blocks_only):
        out.emit(line)
    if not blocks_only:
        verdicts = detect_decompositions(gens, cap=cfg.enumeration_cap)
        interesting = [v for v in verdicts if v.is_gluing or v.is_ordinary]
        gluing = any(v.is_gluing for v in verdicts)
        out.emit(f"gluing: {'yes' if gluing else 'no'}")
        for v in interesting:
            notes = []
            if v.is_gluing:
                notes.append("gluing")
                notes.append("complete intersection if both parts are (Delorme)")
            if v.is_ordinary:
                notes.append("ordinary")
            if v.is_simple_split:
                notes.append("simple split")
            out.emit(f"  {v}: {', '.join(notes)}")
    out.flush()
    return EXIT_OK


def _check_record(rec: ExampleRecord, cap: int) -> list[str]:
    """Run one corpus record; returns failure messages (empty means pass)."""
    failures: list[str] = []
    enum = all_principal_matrices(rec.generators, cap=cap)
    if not len(enum):
        return [f"{rec.name}: no principal matrices enumerated"]
    diag = enum.matrices[0].diagonal
    if diag != rec.expected_diagonal:
        failures.append(f"{rec.name}: diagonal {diag} != expected {rec.expected_diagonal}")
    by_matrix = {pm.matrix.rows: rank(pm.matrix) for pm in enum}
    realized_ranks = set(by_matrix.values())
    missing = rec.expected_ranks - realized_ranks
    if missing:
        failures.append(
            f"{rec.name}: expected ranks {sorted(rec.expected_ranks)} "
            f"but only {sorted(realized_ranks)} realized"
        )
    for disp in rec.displayed:
        got = by_matrix.get(disp.rows)
        if got is None:
            failures.append(f"{rec.name}: reference matrix (rank {disp.rank}) not enumerated")
        elif got != disp.rank:
            failures.append(
                f"{rec.name}: reference matrix has rank {got}, expected {disp.rank}"
            )
    if rec.expected_type is not None:
        want = tuple(sorted((int(p) for p in rec.expected_type.split("+")), reverse=True))
        target_rank = min(rec.expected_ranks)
        realized = set()
        for pm in enum:
            if rank(pm.matrix) == target_rank:
                realized.add(block_decompose(pm.base).type_parts())
        if want not in realized:
            failures.append(
                f"{rec.name}: no rank-{target_rank} matrix of type {rec.expected_type} "
                f"(realized: {sorted(realized)})"
            )
    return failures


def cmd_examples(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    if args.corpus:
        with open(args.corpus) as fh:
            raw = json.load(fh)
        records = [record_from_json(obj) for obj in raw]
        if not records:
            out.emit("warning: corpus is empty, nothing to check")
            out.flush()
            return EXIT_OK
    else:
        records = list(corpus_mod.EXAMPLES)
    results = [(rec, _check_record(rec, cfg.enumeration_cap)) for rec in records]
    all_failures = [f for _, failures in results for f in failures]
    passed = sum(1 for _, failures in results if not failures)
    if cfg.output_format == "json":
        out.emit(
            json.dumps(
                {
                    "records": [
                        {"name": rec.name, "passed": not failures, "failures": failures}
                        for rec, failures in results
                    ],
                    "passed": passed,
                    "total": len(records),
                }
            )
        )
    else:
        for rec, failures in results:
            status = "pass" if not failures else "FAIL"
            out.emit(f"{status}: {rec.name} ({rec.provenance})")
            for f in failures:
                out.emit(f"  {f}")
        out.emit(f"{passed}/{len(records)} records pass")
    out.flush()
    return EXIT_OK if not all_failures else EXIT_NEGATIVE


def cmd_fuzz(args) -> int:
    cfg = _config_from_args(args)
    out = _Out(args.output)
    report = run_fuzz(
        seed=args.seed,
        count=args.count,
        max_dim=args.max_dim,
        max_gen=args.max_gen,
        suites=ALL_SUITES,
    )
    if cfg.output_format == "json":
        out.emit(
            json.dumps(
                {
                    "cases": report.cases,
                    "checks": report.checks,
                    "violations": [
                        {"seed": v.case_seed, "suite": v.suite, "message": v.message}
                        for v in report.violations
                    ],
                }
            )
        )
    else:
        for v in report.violations:
            out.emit(str(v))
        out.emit(
            f"fuzz: {report.cases} cases, "
            + ", ".join(f"{k}={v}" for k, v in sorted(report.checks.items()))
        )
        out.emit(f"violations: {len(report.violations)}")
    out.flush()
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semigroup-pm",
        description="Exact computation with principal matrices of numerical semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, generators=False, matrix=False):
        p.add_argument("--format", choices=("text", "json"), default=None, help="output format")
        p.add_argument("--output", metavar="FILE", default=None, help="also write output to FILE")
        p.add_argument("--max-dim-cap", type=int, default=None, help="override the dimension cap")
        p.add_argument("--strict", dest="lenient", action="store_false", default=False,
                       help="diagonal entries must be <= -2 (default)")
        p.add_argument("--lenient", dest="lenient", action="store_true",
                       help="allow -1 diagonal entries in pseudo validation")
        if generators:
            p.add_argument("generators", nargs="*", type=int, help="generator values")
            p.add_argument("--file", default=None, help="read extra generators from a file")
            p.add_argument("--cap", type=int, default=None, help="enumeration cap")
        if matrix:
            p.add_argument("matrix_file", help="matrix file")
            p.add_argument(
                "--matrix-format",
                choices=("text", "json"),
                default="text",
                help="matrix file format",
            )

    p = sub.add_parser("compute", help="canonical principal matrix")
    add_common(p, generators=True)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("enumerate", help="all principal matrices with ranks")
    add_common(p, generators=True)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("certify", help="sufficiency certificate for a matrix file")
    add_common(p, matrix=True)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("recover", help="recover generators from a matrix file")
    add_common(p, matrix=True)
    p.set_defaults(fn=cmd_recover)

    p = sub.add_parser("classify", help="ranks, block types, decompositions")
    add_common(p, generators=True)
    p.add_argument("--blocks-only", action="store_true", help="print block reports only")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("decompose", help="block decompositions only (classify --blocks-only)")
    add_common(p, generators=True)
    p.set_defaults(fn=lambda a: cmd_classify(a, blocks_only=True))

    p = sub.add_parser("examples", help="run the embedded regression corpus")
    add_common(p)
    p.add_argument("--corpus", default=None, help="JSON corpus file instead of the embedded one")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap")
    p.set_defaults(fn=cmd_examples)

    p = sub.add_parser("fuzz", help="randomized invariant checking")
    add_common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--max-gen", type=int, default=120)
    p.set_defaults(fn=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
