"""Command line interface.

Subcommands:

* ``analyze``   — full run over every scope, report + exports
* ``sentiment`` — sentiment summaries and test cascades only
* ``network``   — pair extraction and network analysis for one scope
* ``export``    — re-emit CSV/graph files from a saved report
* ``inspect``   — corpus counts and role-analysis eligibility

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from pathlib import Path

from . import ngram, pipeline
from .corpus import (
    REGIONS,
    CorpusError,
    Role,
    Subcase,
    load_corpus,
    parse_subcase,
    role_analysis_eligibility,
)

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this interface reserves 2 for
    # data errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _parse_role(value: str) -> Role:
    table = {
        "victim": Role.VICTIM,
        "victima": Role.VICTIM,
        "víctima": Role.VICTIM,
        "victims": Role.VICTIM,
        "appearer": Role.APPEARER,
        "appearers": Role.APPEARER,
        "compareciente": Role.APPEARER,
    }
    role = table.get(value.strip().lower())
    if role is None:
        raise argparse.ArgumentTypeError(f"unknown role {value!r}")
    return role


def _parse_threshold(value: str):
    if value == "auto":
        return "auto"
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("threshold must be 'auto' or a positive integer")
    if v < 1:
        raise argparse.ArgumentTypeError("threshold must be >= 1")
    return v


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help="INI config file ([redlex] section)")
    parser.add_argument("--corpus", metavar="PATH", help="transcript file or directory")
    parser.add_argument("--stopwords", metavar="FILE")
    parser.add_argument("--lemma-lexicon", metavar="FILE")
    parser.add_argument("--valence-lexicon", metavar="FILE")
    parser.add_argument("--polarity-positive", metavar="FILE")
    parser.add_argument("--polarity-negative", metavar="FILE")
    parser.add_argument("--mode", choices=["bigram", "skipgram"], default=None)
    parser.add_argument("--max-skip", type=int, default=None, metavar="N")
    parser.add_argument("--threshold", type=_parse_threshold, default=None, metavar="auto|N")
    parser.add_argument("--alpha", type=float, default=None)
    parser.add_argument("--fallback-weight", type=int, default=None, metavar="N")
    parser.add_argument("--methods", default=None, metavar="NAME[,NAME...]")
    parser.add_argument("--seed", type=int, default=None, metavar="N")
    parser.add_argument("--min-docs", type=int, default=None, metavar="N")
    parser.add_argument("--top-n", type=int, default=None, metavar="N")
    parser.add_argument("--fold-diacritics", action="store_true", default=None)
    parser.add_argument(
        "--pairs-before-stopwords",
        action="store_true",
        default=None,
        help="extract pairs first, then drop pairs containing stopwords",
    )
    parser.add_argument("--unweighted", action="store_true", default=None,
                        help="unweighted modularity and community detection")
    parser.add_argument("--out", metavar="DIR", help="output directory")


_CONFIG_KEYS = {
    "corpus": str,
    "stopwords": str,
    "lemma_lexicon": str,
    "valence_lexicon": str,
    "polarity_positive": str,
    "polarity_negative": str,
    "mode": str,
    "max_skip": int,
    "threshold": str,
    "alpha": float,
    "fallback_weight": int,
    "methods": str,
    "seed": int,
    "min_docs": int,
    "top_n": int,
    "fold_diacritics": bool,
    "pairs_before_stopwords": bool,
    "unweighted": bool,
    "out": str,
}


def _load_config_file(path: str) -> dict:
    parser = configparser.ConfigParser()
    read = parser.read(path, encoding="utf-8")
    if not read:
        raise CorpusError(f"cannot read config file: {path}")
    if not parser.has_section("redlex"):
        raise CorpusError(f"{path}: missing [redlex] section")
    section = parser["redlex"]
    values = {}
    for key, kind in _CONFIG_KEYS.items():
        if key not in section:
            continue
        if kind is bool:
            values[key] = section.getboolean(key)
        elif kind is int:
            values[key] = section.getint(key)
        elif kind is float:
            values[key] = section.getfloat(key)
        else:
            values[key] = section.get(key)
    return values


def _build_config(args) -> pipeline.AnalysisConfig:
    file_values = _load_config_file(args.config) if args.config else {}

    def pick(name, default=None):
        value = getattr(args, name, None)
        if value is not None:
            return value
        if name in file_values:
            return file_values[name]
        return default

    corpus_path = pick("corpus")
    if not corpus_path:
        raise CorpusError("no corpus given (use --corpus or the config file)")
    threshold = pick("threshold", "auto")
    if isinstance(threshold, str) and threshold != "auto":
        threshold = int(threshold)
    methods = pick("methods")
    if isinstance(methods, str):
        methods = tuple(m.strip() for m in methods.split(",") if m.strip())
    try:
        return pipeline.AnalysisConfig(
            corpus_path=corpus_path,
            stopwords=pick("stopwords"),
            lemma_lexicon=pick("lemma_lexicon"),
            valence_lexicon=pick("valence_lexicon"),
            polarity_positive=pick("polarity_positive"),
            polarity_negative=pick("polarity_negative"),
            mode=ngram.Mode(pick("mode", "bigram")),
            max_skip=pick("max_skip", 2),
            threshold=threshold,
            alpha=pick("alpha", 0.05),
            fallback_weight=pick("fallback_weight", 1),
            methods=methods or pipeline.DEFAULT_METHOD_NAMES,
            seed=pick("seed", 0),
            out_dir=pick("out"),
            fold_diacritics=bool(pick("fold_diacritics", False)),
            stopwords_first=not bool(pick("pairs_before_stopwords", False)),
            use_weights=not bool(pick("unweighted", False)),
            min_docs=pick("min_docs", 3),
            top_n=pick("top_n", 20),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


class _UsageError(Exception):
    pass


def _require_out(config: pipeline.AnalysisConfig) -> Path:
    if not config.out_dir:
        raise _UsageError("an output directory is required (--out)")
    return Path(config.out_dir)


def _cmd_analyze(args) -> int:
    config = _build_config(args)
    out = _require_out(config)
    bundle = pipeline.run_all(config)
    written = pipeline.export_bundle(bundle, out)
    print(f"wrote {len(written)} file(s) under {out}")
    return 0


def _cmd_sentiment(args) -> int:
    config = _build_config(args)
    out = _require_out(config)
    res = pipeline.load_resources(config)
    out.mkdir(parents=True, exist_ok=True)
    reports = []
    for scope in pipeline.enumerate_scopes():
        report = pipeline.run_scope_sentiment(config, scope, res)
        reports.append(report)
        if report["status"] != "ok":
            continue
        rows = []
        for table, entries in report["frequencies"].items():
            for lemma, count in entries:
                rows.append([table, lemma, count])
        path = out / f"{report['name']}_frequencies.csv"
        pipeline.write_csv_rows(path, ["table", "lemma", "count"], rows)
    payload = {"config": config.to_dict(), "scopes": reports}
    path = out / "sentiment.json"
    path.write_text(pipeline.canonical_json(payload) + "\n", encoding="utf-8", newline="\n")
    print(f"wrote sentiment report under {out}")
    return 0


def _cmd_network(args) -> int:
    config = _build_config(args)
    out = _require_out(config)
    try:
        subcase = parse_subcase(args.subcase) if args.subcase else None
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    scope = pipeline.Scope(subcase, args.role)
    res = pipeline.load_resources(config)
    report = pipeline.run_scope(config, scope, res)
    payload = {"config": config.to_dict(), "scopes": [report]}
    bundle = pipeline.ReportBundle(data=pipeline._round_floats(payload))
    out.mkdir(parents=True, exist_ok=True)
    path = out / "network.json"
    path.write_text(bundle.to_json() + "\n", encoding="utf-8", newline="\n")
    written = pipeline.export_bundle(bundle, out, formats=("csv", "graph"))
    print(f"wrote network report and {len(written)} file(s) under {out}")
    return 0


def _cmd_export(args) -> int:
    path = Path(args.bundle)
    if not path.is_file():
        raise CorpusError(f"bundle not found: {path}")
    try:
        bundle = pipeline.ReportBundle.from_json(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{path}: invalid JSON ({exc.msg})") from None
    formats = tuple(f.strip() for f in args.formats.split(",") if f.strip())
    try:
        written = pipeline.export_bundle(bundle, args.out, formats=formats)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    print(f"wrote {len(written)} file(s) under {args.out}")
    return 0


def _cmd_inspect(args) -> int:
    config = _build_config(args)
    corpus = load_corpus(config.corpus_path)
    print(f"documents: {len(corpus)} ({sum(1 for d in corpus if d.skipped)} skipped)")
    print(f"{'subcase':<20} {'total':>5} {'appearers':>9} {'victims':>7} {'unknown':>7}")
    for subcase in (*REGIONS, Subcase.UNASSIGNED):
        total = corpus.count(subcase=subcase)
        print(
            f"{subcase.value:<20} {total:>5}"
            f" {corpus.count(subcase, Role.APPEARER):>9}"
            f" {corpus.count(subcase, Role.VICTIM):>7}"
            f" {corpus.count(subcase, Role.UNKNOWN):>7}"
        )
    print()
    print(f"role-analysis eligibility (min_docs={config.min_docs}):")
    for subcase, role, eligible in role_analysis_eligibility(corpus, config.min_docs):
        n = corpus.count(subcase, role)
        flag = "yes" if eligible else "no"
        print(f"  {subcase.value:<20} {role.value:<9} {n:>4}  eligible={flag}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="redlex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full analysis over every scope")
    _add_common_options(p_analyze)
    p_analyze.set_defaults(func=_cmd_analyze)

    p_sent = sub.add_parser("sentiment", help="sentiment summaries and tests only")
    _add_common_options(p_sent)
    p_sent.set_defaults(func=_cmd_sentiment)

    p_net = sub.add_parser("network", help="pair extraction and network analysis for one scope")
    _add_common_options(p_net)
    p_net.add_argument("--subcase", default=None, help="region name (default: general)")
    p_net.add_argument("--role", type=_parse_role, default=None, help="victima|compareciente")
    p_net.set_defaults(func=_cmd_network)

    p_export = sub.add_parser("export", help="re-emit files from a saved report")
    p_export.add_argument("--bundle", required=True, metavar="REPORT_JSON")
    p_export.add_argument("--out", required=True, metavar="DIR")
    p_export.add_argument("--formats", default="json,csv,graph", metavar="LIST")
    p_export.set_defaults(func=_cmd_export)

    p_inspect = sub.add_parser("inspect", help="print corpus counts and eligibility")
    _add_common_options(p_inspect)
    p_inspect.set_defaults(func=_cmd_inspect)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"redlex: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (CorpusError, ValueError, OSError) as exc:
        print(f"redlex: data error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
