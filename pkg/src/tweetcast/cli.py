"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data or validation error.
Results go to stdout or the --out file; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, FIXTURE_VERSION
from .census import CensusError, load_state_profiles, validate_profiles
from .corpus import (BOTH_POLICIES, CandidateSpec, IngestError, bucket_by_day, daily_csv,
                     plot_daily_svg, read_tweets)
from .evaluation import (DEFAULT_SWING_STATES, EvaluationError, compare, read_comparison_table,
                         read_shares)
from .lexicon import LexiconError, afinn111, load_lexicon
from .model import (MODELS, STRATEGIES, WEIGHT_MODES, ModelError, TwitterSupport,
                    estimate_twitter_support, forecast)
from .synth import SynthError, SynthSpec, generate_corpus, metadata

log = logging.getLogger("tweetcast")

DATA_ERRORS = (LexiconError, IngestError, CensusError, ModelError, EvaluationError,
               SynthError, OSError, json.JSONDecodeError, UnicodeDecodeError)

DEFAULTS = {
    "model": 2,
    "weights": "normalized",
    "e_strategy": "positive-share",
    "smoothing": True,
    "english_only": True,
    "strict": False,
    "phrases": False,
    "both": "full",
    "candidate1": "obama",
    "candidate2": "romney",
    "align": "1=dem,2=rep",
    "threads": 1,
    "format": None,
    "swing": ",".join(DEFAULT_SWING_STATES),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _tweet_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tweets", metavar="JSONL", help="tweet records, one JSON object per line")
    p.add_argument("--afinn", metavar="PATH", help="lexicon file (default: bundled AFINN-111)")
    p.add_argument("--english-only", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--strict", action="store_true", default=None,
                   help="abort on the first unparseable record")
    p.add_argument("--phrases", action="store_true", default=None,
                   help="match multi-word lexicon entries")
    p.add_argument("--both", choices=BOTH_POLICIES, default=None,
                   help="tweets naming both candidates: count for each, or drop")
    p.add_argument("--candidate1", metavar="TERMS", help="comma-separated match terms")
    p.add_argument("--candidate2", metavar="TERMS")
    p.add_argument("--threads", type=int, default=None, metavar="N")


def _census_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--census", metavar="CSV")
    p.add_argument("--priors", metavar="CSV")
    p.add_argument("--apportionment", metavar="CSV")
    p.add_argument("--turnout", metavar="CSV", help="per-state turnout weights")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tweetcast", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"tweetcast {__version__} (fixtures {FIXTURE_VERSION})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    parser.commands = sub.choices

    p = sub.add_parser("forecast", help="state and national forecast from tweets and census data")
    p.add_argument("--config", metavar="JSON")
    _tweet_options(p)
    _census_options(p)
    p.add_argument("--support", type=float, metavar="E1",
                   help="use this candidate-1 twitter support instead of --tweets")
    p.add_argument("--model", type=int)
    p.add_argument("--weights", help=f"segment weights: {', '.join(WEIGHT_MODES)}")
    p.add_argument("--e-strategy", help=f"one of {', '.join(STRATEGIES)}")
    p.add_argument("--smoothing", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--align", help="candidate to party mapping, e.g. 1=dem,2=rep")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=("json", "csv"))

    p = sub.add_parser("evaluate", help="absolute errors and MAE against actual results")
    p.add_argument("--config", metavar="JSON")
    p.add_argument("--table", metavar="CSV", help="comparison table with percent columns")
    p.add_argument("--predicted", metavar="PATH", help="forecast JSON or shares CSV")
    p.add_argument("--actual", metavar="CSV")
    p.add_argument("--baseline", metavar="PATH", help="forecast JSON, shares CSV or priors CSV")
    p.add_argument("--swing", metavar="STATES", help="comma-separated states to report margins for")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=("json", "csv"))

    p = sub.add_parser("timeseries", help="daily positive/negative sentiment per candidate")
    p.add_argument("--config", metavar="JSON")
    _tweet_options(p)
    p.add_argument("--out", metavar="CSV")
    p.add_argument("--svg", metavar="PATH", help="also draw an SVG line chart")

    p = sub.add_parser("synth", help="generate a synthetic tweet corpus")
    p.add_argument("--config", metavar="JSON")
    p.add_argument("--spec", metavar="JSON", help="synthetic corpus spec")
    p.add_argument("--seed", type=int)
    p.add_argument("--n-tweets", type=int)
    p.add_argument("--planted-e", type=float, metavar="E1")
    p.add_argument("--out", metavar="JSONL")
    p.add_argument("--afinn", metavar="PATH")

    p = sub.add_parser("validate", help="check census inputs and list findings")
    p.add_argument("--config", metavar="JSON")
    _census_options(p)
    return parser


def _settings(args: argparse.Namespace) -> dict:
    """Defaults, then the --config file, then explicit flags."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise UsageError("--config must hold a JSON object")
        merged.update({k.replace("-", "_"): v for k, v in cfg.items()})
    merged.update({k: v for k, v in vars(args).items() if v is not None})
    return merged


def _require(cfg: dict, *names: str) -> None:
    missing = ["--" + n.replace("_", "-") for n in names if not cfg.get(n)]
    if missing:
        raise UsageError(f"missing required option(s): {' '.join(missing)}")


def _lexicon(cfg):
    return load_lexicon(Path(cfg["afinn"])) if cfg.get("afinn") else afinn111()


def _specs(cfg):
    def terms(v):
        items = v if isinstance(v, list) else str(v).split(",")
        return tuple(t.strip().lower() for t in items if t.strip())
    try:
        return (CandidateSpec(1, terms(cfg["candidate1"])), CandidateSpec(2, terms(cfg["candidate2"])))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _alignment(value) -> dict[int, str]:
    if isinstance(value, dict):
        pairs = value.items()
    else:
        pairs = [item.split("=", 1) for item in str(value).split(",")]
    try:
        align = {int(k): str(v).strip() for k, v in pairs}
    except ValueError:
        raise UsageError(f"bad --align {value!r}; expected e.g. 1=dem,2=rep") from None
    if sorted(align) != [1, 2] or sorted(align.values()) != ["dem", "rep"]:
        raise UsageError("--align must map candidates 1 and 2 onto dem and rep")
    return align


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _fmt(cfg, default="json") -> str:
    if cfg.get("format"):
        return cfg["format"]
    out = cfg.get("out") or ""
    return "csv" if out.endswith(".csv") else default


def _daily(cfg):
    lexicon = _lexicon(cfg)
    specs = _specs(cfg)
    corpus = read_tweets(cfg["tweets"], specs, english_only=cfg["english_only"],
                         strict=cfg["strict"])
    log.info("ingest: %s", corpus.stats.as_dict())
    return bucket_by_day(corpus, lexicon, specs, phrases=cfg["phrases"], both=cfg["both"],
                         workers=cfg["threads"])


def run_forecast(cfg: dict) -> int:
    if cfg.get("model") not in MODELS:
        raise UsageError(f"--model {cfg.get('model')!r} invalid; valid models: "
                         + ", ".join(map(str, MODELS)))
    _require(cfg, "census", "priors", "apportionment")
    if cfg["weights"] not in WEIGHT_MODES:
        raise UsageError(f"--weights {cfg['weights']!r} invalid; choose from {', '.join(WEIGHT_MODES)}")
    if cfg["e_strategy"] not in STRATEGIES:
        raise UsageError(f"--e-strategy {cfg['e_strategy']!r} invalid; choose from {', '.join(STRATEGIES)}")
    if cfg.get("support") is None and not cfg.get("tweets"):
        raise UsageError("one of --tweets or --support is required")
    align = _alignment(cfg["align"])
    table = load_state_profiles(cfg["census"], cfg["priors"], cfg["apportionment"],
                                cfg.get("turnout"))
    if cfg.get("support") is not None:
        support = TwitterSupport.fixed(float(cfg["support"]))
    else:
        support = estimate_twitter_support(_daily(cfg), cfg["e_strategy"], cfg["smoothing"])
    log.info("twitter support %s (%s)", support.e, support.strategy)
    result = forecast(table, support, cfg["model"], cfg["weights"], align)
    _write(result.to_csv() if _fmt(cfg) == "csv" else result.to_json(), cfg.get("out"))
    return 0


def run_evaluate(cfg: dict) -> int:
    if cfg.get("table"):
        tab = read_comparison_table(cfg["table"])
        predicted, actual, baseline = tab.predicted, tab.actual, tab.baseline
    else:
        _require(cfg, "predicted", "actual", "baseline")
        predicted = read_shares(cfg["predicted"])
        actual = read_shares(cfg["actual"])
        baseline = read_shares(cfg["baseline"])
    swing = cfg["swing"] if isinstance(cfg["swing"], list) else [
        s.strip() for s in str(cfg["swing"]).split(",") if s.strip()]
    report = compare(predicted, baseline, actual, swing)
    if cfg.get("out"):
        _write(report.to_csv() if _fmt(cfg) == "csv" else report.to_json(), cfg["out"])
    print(report.summary())
    return 0


def run_timeseries(cfg: dict) -> int:
    _require(cfg, "tweets")
    rows = _daily(cfg)
    _write(daily_csv(rows), cfg.get("out"))
    if cfg.get("svg"):
        names = {1: _specs(cfg)[0].match_terms[0], 2: _specs(cfg)[1].match_terms[0]}
        plot_daily_svg(rows, cfg["svg"], labels=names)
    return 0


def run_synth(cfg: dict) -> int:
    spec_dict = {}
    if cfg.get("spec"):
        with open(cfg["spec"], encoding="utf-8") as fh:
            spec_dict = json.load(fh)
        if not isinstance(spec_dict, dict):
            raise UsageError("synth spec must be a JSON object")
    for flag, key in (("seed", "seed"), ("n_tweets", "n_tweets"), ("planted_e", "planted_e")):
        if cfg.get(flag) is not None:
            spec_dict[key] = [cfg[flag]] if key == "planted_e" else cfg[flag]
    try:
        spec = SynthSpec.from_dict(spec_dict)
    except SynthError as exc:
        raise UsageError(f"invalid synth spec: {exc}") from None
    text = generate_corpus(spec, _lexicon(cfg))
    meta = json.dumps(metadata(spec), sort_keys=True)
    if cfg.get("out"):
        _write(text, cfg["out"])
        print(meta)
    else:
        sys.stdout.write(text)
        print(meta, file=sys.stderr)
    return 0


def run_validate(cfg: dict) -> int:
    _require(cfg, "census", "priors", "apportionment")
    table = load_state_profiles(cfg["census"], cfg["priors"], cfg["apportionment"],
                                cfg.get("turnout"), validate=False)
    report = validate_profiles(table)
    print(f"{table.n_states} states, {table.total_electoral_votes} electoral votes")
    print(report)
    return 0 if report.ok else 2


COMMANDS = {
    "forecast": run_forecast,
    "evaluate": run_evaluate,
    "timeseries": run_timeseries,
    "synth": run_synth,
    "validate": run_validate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1
    try:
        cfg = _settings(args)
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        parser.commands[args.command].print_usage(sys.stderr)
        print(f"tweetcast {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except DATA_ERRORS as exc:
        print(f"tweetcast {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
