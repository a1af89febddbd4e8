"""Command-line interface: summarize, keywords, evaluate, batch-eval.

Flags mirror PipelineConfig field names; a "key = value" config file can
supply any of them, with flags taking precedence.  Exit codes: 0 success,
1 usage/config error, 2 data error, 3 non-convergence under --strict.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import biascore, metrics, pipeline, textprep
from .pipeline import ConfigError, PipelineConfig
from .textprep import BIAS_CORPUS, DataError


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _add_config_flags(parser: argparse.ArgumentParser, with_mode: bool = True) -> None:
    group = parser.add_argument_group("pipeline configuration")
    group.add_argument("--config", metavar="FILE", help="key = value config file")
    group.add_argument("--beta", type=float, help="similarity pruning threshold")
    group.add_argument("--damping", type=float, help="pagerank damping factor")
    group.add_argument("--tol", type=float, help="pagerank L1 convergence tolerance")
    group.add_argument("--max-iter", type=int, help="pagerank iteration cap")
    group.add_argument("-k", "--k", type=int, help="sentences to extract")
    group.add_argument("--word-budget", type=int, help="evaluation word budget")
    group.add_argument("--window", type=int, help="keyword co-occurrence window")
    group.add_argument("--top-t", type=int, help="keyword table cap")
    if with_mode:
        group.add_argument("--mode", choices=pipeline.MODES, help="summarization mode")
    group.add_argument("--stopwords", metavar="FILE", help="stopword file override")
    group.add_argument("--language", help="bundled stopword list tag (en, pt)")
    group.add_argument(
        "--normalize-keywords",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="rescale keyword scores to sum to 1 before re-scoring",
    )
    group.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="exit 3 if pagerank fails to converge",
    )


_FLAG_FIELDS = {
    "beta": "beta",
    "damping": "damping",
    "tol": "tol",
    "max_iter": "max_iter",
    "k": "k",
    "word_budget": "word_budget",
    "window": "window",
    "top_t": "top_t",
    "mode": "mode",
    "stopwords": "stopword_path",
    "language": "language",
    "normalize_keywords": "normalize_keywords",
    "strict": "strict",
}


def _build_config(args: argparse.Namespace) -> PipelineConfig:
    config = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    overrides = {
        field: getattr(args, flag)
        for flag, field in _FLAG_FIELDS.items()
        if getattr(args, flag, None) is not None
    }
    return replace(config, **overrides).validate()


def _load_target(args: argparse.Namespace) -> list[textprep.Document]:
    if args.records:
        groups = textprep.load_record_file(args.records)
        group = args.group if args.group is not None else ""
        if group not in groups:
            raise DataError(f"group {group!r} not found in {args.records}")
        return groups[group]
    return textprep.load_directory(args.input)


def _load_bias(args: argparse.Namespace):
    """Returns (bias_documents, keyword_table); at most one is non-None."""
    if getattr(args, "bias_keywords", None):
        return None, biascore.read_keyword_table(args.bias_keywords)
    if getattr(args, "bias_records", None):
        groups = textprep.load_record_file(args.bias_records, origin=BIAS_CORPUS)
        group = getattr(args, "bias_group", None) or ""
        if group not in groups:
            raise DataError(f"group {group!r} not found in {args.bias_records}")
        return groups[group], None
    if getattr(args, "bias", None):
        return textprep.load_directory(args.bias, origin=BIAS_CORPUS), None
    return None, None


def _add_bias_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("bias corpus")
    group.add_argument("--bias", metavar="DIR", help="bias corpus directory")
    group.add_argument("--bias-records", metavar="FILE", help="bias corpus record file")
    group.add_argument("--bias-group", help="group to select from --bias-records")
    group.add_argument(
        "--bias-keywords", metavar="FILE", help="precomputed keyword table (term score)"
    )


def _write_or_print(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_summarize(args: argparse.Namespace) -> int:
    config = _build_config(args)
    documents = _load_target(args)
    bias_docs, table = _load_bias(args)
    summary = pipeline.summarize(documents, config, bias_docs, table)
    _write_or_print("".join(s.raw + "\n" for s in summary.selected), args.output)
    if args.sidecar:
        pipeline.write_sidecar(summary, args.sidecar)
    for warning in summary.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if config.strict and not summary.converged:
        return 3
    return 0


def _cmd_keywords(args: argparse.Namespace) -> int:
    config = _build_config(args)
    bias_docs, _ = _load_bias(args)
    if not bias_docs:
        raise ConfigError("keywords requires --bias or --bias-records")
    table = biascore.extract_keywords(
        bias_docs,
        window=config.window,
        top_t=config.top_t,
        stopwords=config.stopword_set(),
        damping=config.damping,
        tol=config.tol,
        max_iter=config.max_iter,
    )
    lines = "".join(f"{term} {score!r}\n" for term, score in table.keywords.items())
    _write_or_print(lines, args.output)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    config = _build_config(args)
    documents = _load_target(args)
    bias_docs, table = _load_bias(args)
    gold = Path(args.gold)
    if not gold.is_file():
        raise DataError(f"missing gold standard {gold}")
    summary = pipeline.summarize(documents, config, bias_docs, table)
    report = pipeline.evaluate(
        summary, gold.read_text(encoding="utf-8"), documents, config
    )
    _write_or_print(metrics.format_report(report, config.as_dict()), args.output)
    if config.strict and not summary.converged:
        return 3
    return 0


def _cmd_batch_eval(args: argparse.Namespace) -> int:
    config = _build_config(args)
    bias_docs, table = _load_bias(args)
    result = pipeline.batch_eval(args.input, args.out, config, bias_docs, table)
    for name, summary in result.summaries.items():
        for warning in summary.warnings:
            print(f"warning [{name}]: {warning}", file=sys.stderr)
    if config.strict and not result.converged:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="graphsum",
        description="Graph-centrality extractive summarization with "
        "cross-domain keyword biasing and redundancy post-processing.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_sum = sub.add_parser("summarize", help="summarize one document set")
    p_sum.add_argument("--input", metavar="DIR", help="directory of .txt documents")
    p_sum.add_argument("--records", metavar="FILE", help="line-delimited record file")
    p_sum.add_argument("--group", help="group to select from --records")
    p_sum.add_argument("--output", metavar="FILE", help="summary output (default stdout)")
    p_sum.add_argument("--sidecar", metavar="FILE", help="provenance sidecar output")
    _add_bias_flags(p_sum)
    _add_config_flags(p_sum)
    p_sum.set_defaults(func=_cmd_summarize, needs_input=True)

    p_kw = sub.add_parser("keywords", help="extract a bias keyword table")
    p_kw.add_argument("--output", metavar="FILE", help="table output (default stdout)")
    _add_bias_flags(p_kw)
    _add_config_flags(p_kw, with_mode=False)
    p_kw.set_defaults(func=_cmd_keywords, needs_input=False)

    p_eval = sub.add_parser("evaluate", help="summarize and score against a gold file")
    p_eval.add_argument("--input", metavar="DIR", help="directory of .txt documents")
    p_eval.add_argument("--records", metavar="FILE", help="line-delimited record file")
    p_eval.add_argument("--group", help="group to select from --records")
    p_eval.add_argument("--gold", metavar="FILE", required=True, help="gold standard text")
    p_eval.add_argument("--output", metavar="FILE", help="report output (default stdout)")
    _add_bias_flags(p_eval)
    _add_config_flags(p_eval)
    p_eval.set_defaults(func=_cmd_evaluate, needs_input=True)

    p_batch = sub.add_parser("batch-eval", help="evaluate every set under a directory")
    p_batch.add_argument("--input", metavar="DIR", required=True, help="parent of set dirs")
    p_batch.add_argument("--out", metavar="DIR", required=True, help="output directory")
    _add_bias_flags(p_batch)
    _add_config_flags(p_batch)
    p_batch.set_defaults(func=_cmd_batch_eval, needs_input=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_input", False) and not (args.input or args.records):
        parser.error(f"{args.command} requires --input or --records")
    try:
        return args.func(args)
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
