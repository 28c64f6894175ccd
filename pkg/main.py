#!/usr/bin/env python3

import argparse
import sys
from dataclasses import asdict, replace

from compliance_lib import exceptions
from compliance_lib.constants import APP_VERSION
from compliance_lib.api import compliance
from compliance_lib.core.bench import (BenchConfig, GeneratorParams,
                                       format_rows, structure_reference_rows)
from compliance_lib.core.engine import reports_to_csv, reports_to_json
from compliance_lib.core.event_log import serialize_event_log
from compliance_lib.enums import EncodingKindEnum, OutputFormatEnum
from compliance_lib.logger import logger

ENCODING_CHOICES = [kind.value for kind in EncodingKindEnum]
OUTPUT_CHOICES = [fmt.value for fmt in OutputFormatEnum]


def add_source_arguments(parser):
    parser.add_argument("--log", help="CSV event log")
    parser.add_argument(
        "--gen", help="generate a log instead: cases=N,len=MIN..MAX,acts=N,seed=N"
    )
    parser.add_argument("--case-col", help="case id column")
    parser.add_argument("--activity-col", help="activity column")
    parser.add_argument("--time-col", help="timestamp column")


def add_rule_arguments(parser):
    parser.add_argument("--rules", help="rule file, one rule per line")
    parser.add_argument(
        "--rule", action="append", default=[], help="rule text, repeatable"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        description="Check order rules on event logs encoded as graphs."
    )
    parser.add_argument("--version", action="version", version=APP_VERSION)
    commands = parser.add_subparsers(dest="command", required=True)

    load = commands.add_parser("load", help="parse a log and summarize it")
    add_source_arguments(load)

    encode = commands.add_parser("encode", help="build graphs, report sizes")
    add_source_arguments(encode)
    encode.add_argument(
        "--encoding", action="append", choices=ENCODING_CHOICES
    )
    encode.add_argument("--out", choices=OUTPUT_CHOICES)

    check = commands.add_parser("check", help="check rules on one encoding")
    add_source_arguments(check)
    add_rule_arguments(check)
    check.add_argument(
        "--encoding", choices=ENCODING_CHOICES,
        default=EncodingKindEnum.UA.value
    )
    check.add_argument("--out", choices=OUTPUT_CHOICES)
    check.add_argument("--parallel", action="store_true")

    bench = commands.add_parser("bench", help="time rules on every encoding")
    add_source_arguments(bench)
    add_rule_arguments(bench)
    bench.add_argument("--encoding", action="append", choices=ENCODING_CHOICES)
    bench.add_argument("--reps", type=int)
    bench.add_argument("--out", choices=OUTPUT_CHOICES)
    bench.add_argument(
        "--parallel", action="store_true",
        help="add rows with case-partitioned evaluation"
    )
    bench.add_argument(
        "--oracle", action="store_true", help="add an oracle row"
    )
    bench.add_argument(
        "--reference", action="store_true",
        help="print forecast sizes of the published logs and exit"
    )

    gen = commands.add_parser("gen", help="write a generated log as CSV")
    gen.add_argument("--gen", required=True)
    gen.add_argument("--output", help="file to write, stdout when omitted")

    return parser


def column_config(args):
    config = compliance.settings.column_config
    overrides = {
        "case_column": args.case_col,
        "activity_column": args.activity_col,
        "timestamp_column": args.time_col,
    }
    return replace(config, **{k: v for k, v in overrides.items() if v})


def resolve_log(parser, args):
    if bool(args.log) == bool(args.gen):
        parser.error("exactly one of --log and --gen is required")
    if args.gen:
        return compliance.generate(args.gen)
    return compliance.load(args.log, column_config(args))


def resolve_rules(parser, args):
    rules = []
    if args.rules:
        rules.extend(compliance.load_rules(args.rules))
    rules.extend(compliance.parse_rule(text) for text in args.rule)
    if not rules:
        parser.error("at least one --rule or --rules is required")
    return rules


def output_format(args):
    if args.out:
        return OutputFormatEnum(args.out)
    return compliance.settings.output_format


def encodings(args):
    if not args.encoding:
        return list(EncodingKindEnum)
    return [EncodingKindEnum(value) for value in dict.fromkeys(args.encoding)]


def run_load(parser, args):
    log = resolve_log(parser, args)
    summary = compliance.summarize(log)
    for name, value in asdict(summary).items():
        print("{}: {}".format(name, value))


def run_encode(parser, args):
    log = resolve_log(parser, args)
    rows = [
        compliance.loading_report(log, kind).to_row()
        for kind in encodings(args)
    ]
    print(format_rows(rows, output_format(args)), end="")


def run_check(parser, args):
    log = resolve_log(parser, args)
    rules = resolve_rules(parser, args)
    encoded = compliance.encode(log, args.encoding)
    reports = [
        compliance.check(encoded, rule, parallel=args.parallel)
        for rule in rules
    ]
    if output_format(args) == OutputFormatEnum.JSON:
        print(reports_to_json(reports))
    else:
        print(reports_to_csv(reports), end="")


def run_bench(parser, args):
    if args.reference:
        print(format_rows(structure_reference_rows(), output_format(args)),
              end="")
        return

    if bool(args.log) == bool(args.gen):
        parser.error("exactly one of --log and --gen is required")
    settings = compliance.settings
    config = BenchConfig(
        rules=resolve_rules(parser, args),
        log_path=args.log,
        generator=GeneratorParams.from_string(args.gen) if args.gen else None,
        encodings=encodings(args),
        repetitions=args.reps if args.reps is not None else settings.repetitions,
        warmup=settings.warmup,
        output_format=output_format(args),
        parallel=args.parallel,
        include_oracle=args.oracle,
        column_config=column_config(args),
        max_workers=settings.max_workers,
    )
    rows = compliance.bench(config)
    print(format_rows(rows, config.output_format), end="")


def run_gen(parser, args):
    text = serialize_event_log(compliance.generate(args.gen))
    if not args.output:
        print(text, end="")
        return
    with open(args.output, "w", encoding="utf-8", newline="") as f:
        f.write(text)


COMMANDS = {
    "load": run_load,
    "encode": run_encode,
    "check": run_check,
    "bench": run_bench,
    "gen": run_gen,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](parser, args)
    except exceptions.EncodingDisagreementError as e:
        logger.error(e.message)
        print("error: {}".format(e.message), file=sys.stderr)
        return 2
    except exceptions.ComplianceLibException as e:
        print("error: {}".format(e.message), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
