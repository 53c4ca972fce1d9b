"""Command-line interface.

Subcommands: fit, evaluate, generate, analyze, bootstrap. Exit codes: 0 on
success, 1 for usage or configuration errors, 2 for data errors, 3 when the
rejection-sampling budget is exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from riscgen.analysis.corpus import analyze_corpus, report_json, report_table
from riscgen.analysis.tokenizer import rules_for
from riscgen.errors import (
    DataError,
    RejectionBudgetExhausted,
    RiscgenError,
    UsageError,
)
from riscgen.pipeline import generate, load_run_config
from riscgen.protection.bootstrap import BootstrapSpec, bootstrap_seed_data
from riscgen.protection.metrics import (
    inverted_ks,
    new_uc_count,
    per_column_inverted_ks,
    uc_stats,
    z_test,
)
from riscgen.protection.model import fit, load_model, sample, save_model
from riscgen.protection.schema import read_csv, write_csv


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="riscgen",
        description="Generate and analyze synthetic bilingual automobile insurance contracts.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_fit = sub.add_parser("fit", help="fit a dependency model on a protection CSV")
    p_fit.add_argument("--seed-data", required=True, type=Path, help="training CSV path")
    p_fit.add_argument("--out", required=True, type=Path, help="output model JSON path")
    p_fit.add_argument("--seed", type=int, default=42)

    p_eval = sub.add_parser("evaluate", help="compare a model's samples against a reference CSV")
    p_eval.add_argument("--model", required=True, type=Path)
    p_eval.add_argument("--reference", required=True, type=Path)
    p_eval.add_argument("--n", required=True, type=int, help="synthetic sample size")
    p_eval.add_argument("--model-b", type=Path, help="optional second model for the z-test")
    p_eval.add_argument("--seed", type=int, default=42)
    p_eval.add_argument("--report", type=Path, help="optional JSON report path")

    p_gen = sub.add_parser("generate", help="generate a contract corpus from a config file")
    p_gen.add_argument("--config", required=True, type=Path)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--count", type=int)
    p_gen.add_argument("--langs", help="comma-separated subset of fr,en")
    p_gen.add_argument("--out", type=Path, help="output directory")
    p_gen.add_argument("--force", action="store_true", help="write into a non-empty directory")

    p_an = sub.add_parser("analyze", help="compute aggregate statistics over a .txt corpus")
    p_an.add_argument("--corpus", required=True, type=Path)
    p_an.add_argument("--lang", required=True, choices=("fr", "en"))
    p_an.add_argument("--report", required=True, type=Path, help="JSON report path")

    p_boot = sub.add_parser("bootstrap", help="manufacture a synthetic seed table CSV")
    p_boot.add_argument("--rows", required=True, type=int)
    p_boot.add_argument("--out", required=True, type=Path)
    p_boot.add_argument("--seed", type=int, default=42)
    p_boot.add_argument("--target-mean", type=float, default=BootstrapSpec.target_mean_protections)

    return parser


def _cmd_fit(args) -> int:
    table = read_csv(args.seed_data)
    model = fit(table, rng_seed=args.seed)
    save_model(model, args.out)
    print(f"fitted on {len(table)} rows x {len(table.schema)} columns -> {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    model = load_model(args.model)
    reference = read_csv(args.reference)
    synthetic = sample(model, args.n, rng_seed=args.seed)
    report = {
        "model": str(args.model),
        "reference": str(args.reference),
        "n": args.n,
        "seed": args.seed,
        "inverted_ks": inverted_ks(reference, synthetic),
        "reference_uc": uc_stats(reference).as_dict(),
        "synthetic_uc": uc_stats(synthetic).as_dict(),
        "new_uc_count": new_uc_count(reference, synthetic),
    }
    if args.model_b is not None:
        model_b = load_model(args.model_b)
        synthetic_b = sample(model_b, args.n, rng_seed=args.seed)
        scores_a = per_column_inverted_ks(reference, synthetic)
        scores_b = per_column_inverted_ks(reference, synthetic_b)
        result = z_test(scores_a, scores_b)
        report["model_b"] = str(args.model_b)
        report["model_b_inverted_ks"] = inverted_ks(reference, synthetic_b)
        report["z_test"] = {
            "z": result.z,
            "reject": result.reject,
            "threshold": result.threshold,
        }
    width = max(len(k) for k in report)
    for key, value in report.items():
        print(f"{key:<{width}}  {value}")
    if args.report is not None:
        args.report.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    return 0


def _cmd_generate(args) -> int:
    overrides: dict = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.count is not None:
        overrides["count"] = args.count
    if args.langs is not None:
        overrides["languages"] = args.langs
    if args.out is not None:
        overrides["output_dir"] = str(args.out)
    if args.force:
        overrides["force"] = True
    config = load_run_config(args.config, overrides)
    manifest = generate(config)
    print(
        f"wrote {len(manifest.files)} documents to {config.output_dir} "
        f"(seed {manifest.master_seed}, digest {manifest.config_digest[:12]})"
    )
    return 0


def _cmd_analyze(args) -> int:
    report = analyze_corpus(args.corpus, rules_for(args.lang))
    args.report.parent.mkdir(parents=True, exist_ok=True)
    args.report.write_text(report_json(report), encoding="utf-8")
    table = report_table(report)
    args.report.with_suffix(".txt").write_text(table + "\n", encoding="utf-8")
    print(table)
    return 0


def _cmd_bootstrap(args) -> int:
    spec = BootstrapSpec(target_mean_protections=args.target_mean)
    table = bootstrap_seed_data(spec, args.rows, seed=args.seed)
    write_csv(table, args.out)
    mean = float(table.rows.sum(axis=1).mean())
    print(f"wrote {len(table)} rows to {args.out} (mean protections per row: {mean:.3f})")
    return 0


_COMMANDS = {
    "fit": _cmd_fit,
    "evaluate": _cmd_evaluate,
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "bootstrap": _cmd_bootstrap,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except RejectionBudgetExhausted as exc:
        print(f"riscgen: {exc}", file=sys.stderr)
        return 3
    except UsageError as exc:
        print(f"riscgen: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"riscgen: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"riscgen: {exc}", file=sys.stderr)
        return 1
    except RiscgenError as exc:
        print(f"riscgen: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
