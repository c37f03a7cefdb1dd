"""Command line entry point.

Exit codes: 0 clean, 1 findings reported, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .config import AnalysisConfig, ConfigError, load_config
from .detectors import RULE_IDS, run_all
from .document import FORMATS, MARKDOWN, DocumentStructureError, parse_document
from .lexicon import LexiconError, default_lexicon, load_lexicon_extensions
from .maladies import extract_keywords, infer_maladies
from .reporting import build_report, render_human, render_machine


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clinic",
        description="Locate surface writing symptoms in a manuscript and "
                    "infer the maladies behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", help="analyze one or more documents")
    analyze.add_argument("paths", nargs="+", metavar="PATH")
    analyze.add_argument("--format", choices=sorted(FORMATS), default=MARKDOWN,
                         help="input format (default: markdown)")
    analyze.add_argument("--output", choices=("human", "machine"),
                         default="human",
                         help="human lines or machine JSON (default: human)")
    analyze.add_argument("--config", metavar="FILE",
                         help="threshold overrides, one key = value per line")
    analyze.add_argument("--rules", metavar="IDS",
                         help="comma-separated rule ids to run (default: all)")
    analyze.add_argument("--lexicon", metavar="FILE",
                         help="extra lexicon entries, grouped under "
                              "[class] headers")
    thresholds = analyze.add_argument_group(
        "thresholds", "override any analysis threshold (highest precedence)",
    )
    for field in dataclasses.fields(AnalysisConfig):
        is_int = field.type == "int"
        thresholds.add_argument(
            "--" + field.name.replace("_", "-"),
            type=int if is_int else float,
            default=None,
            metavar="N" if is_int else "X",
            help=f"override {field.name}",
        )
    return parser


def _assemble_config(args) -> AnalysisConfig:
    cfg = AnalysisConfig()
    if args.config:
        cfg = load_config(args.config, cfg)
    overrides = {
        field.name: value
        for field in dataclasses.fields(AnalysisConfig)
        if (value := getattr(args, field.name)) is not None
    }
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    return cfg


def _parse_rules(raw: str | None):
    if raw is None:
        return None
    rules = tuple(part.strip() for part in raw.split(",") if part.strip())
    unknown = sorted(set(rules) - set(RULE_IDS))
    if unknown:
        raise ValueError(f"unknown rule id(s): {', '.join(unknown)}")
    return rules


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _assemble_config(args)
        rules = _parse_rules(args.rules)
        lexicon = default_lexicon()
        if args.lexicon:
            lexicon = load_lexicon_extensions(args.lexicon, lexicon)
    except (ConfigError, LexiconError, ValueError) as exc:
        print(f"clinic: {exc}", file=sys.stderr)
        return 2

    found_anything = False
    for path in args.paths:
        try:
            with open(path, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            print(f"clinic: {path}: {exc.strerror or exc}", file=sys.stderr)
            return 2
        try:
            doc = parse_document(source, args.format, lexicon=lexicon,
                                 words_per_page=cfg.words_per_page)
        except DocumentStructureError as exc:
            print(f"clinic: {path}: {exc}", file=sys.stderr)
            return 2
        diagnostics = run_all(doc, cfg, lexicon, rules=rules)
        profile = extract_keywords(doc, cfg, lexicon)
        findings = infer_maladies(doc, diagnostics, cfg, profile, lexicon)
        report = build_report(path, cfg, diagnostics, findings)
        if args.output == "machine":
            sys.stdout.write(render_machine(report))
        else:
            sys.stdout.write(render_human(report))
        if diagnostics or findings:
            found_anything = True
    return 1 if found_anything else 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
