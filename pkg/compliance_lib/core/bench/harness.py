import io
import json
import os
import time
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from ... import exceptions
from ...constants import (DEFAULT_REPETITIONS, DEFAULT_WARMUP,
                          PUBLISHED_STRUCTURE)
from ...enums import EncodingKindEnum, OutputFormatEnum
from ...logger import logger
from ..encoders import encode, expected_sizes, report_for
from ..engine import check
from ..event_log import ColumnConfig, load_event_log, log_summary
from ..oracle import oracle_check
from ..rules import Rule, format_rule
from ..utils import case_sort_key
from .generator import GeneratorParams, gen_log

ORACLE_ROW = "oracle"


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark run: a log source, the encodings and the rules.

    Exactly one of log_path and generator is set. Every rule is run
    warmup + repetitions times per encoding; the warm-up runs are
    discarded.
    """
    rules: Tuple[Rule, ...]
    log_path: Optional[str] = None
    generator: Optional[GeneratorParams] = None
    encodings: Tuple[EncodingKindEnum, ...] = tuple(EncodingKindEnum)
    repetitions: int = DEFAULT_REPETITIONS
    warmup: int = DEFAULT_WARMUP
    output_format: OutputFormatEnum = OutputFormatEnum.CSV
    parallel: bool = False
    include_oracle: bool = False
    log_name: Optional[str] = None
    column_config: Optional[ColumnConfig] = None
    max_workers: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "encodings", tuple(self.encodings))

        if (self.log_path is None) == (self.generator is None):
            raise exceptions.InvalidBenchConfigError(
                "Exactly one of log_path and generator must be given"
            )
        if self.repetitions < 1:
            raise exceptions.InvalidBenchConfigError(
                "repetitions must be >= 1, got {}".format(self.repetitions)
            )
        if self.warmup < 0:
            raise exceptions.InvalidBenchConfigError(
                "warmup must be >= 0, got {}".format(self.warmup)
            )
        if not self.encodings and not self.include_oracle:
            raise exceptions.InvalidBenchConfigError(
                "At least one encoding is required"
            )
        if len(set(self.encodings)) != len(self.encodings):
            raise exceptions.InvalidBenchConfigError(
                "Encodings must not repeat"
            )

    @property
    def name(self):
        if self.log_name:
            return self.log_name
        if self.log_path is not None:
            return os.path.basename(self.log_path)
        return "generated({})".format(self.generator.describe())

    def load_log(self):
        if self.log_path is not None:
            return load_event_log(self.log_path, self.column_config)
        return gen_log(self.generator)


@dataclass(frozen=True)
class QueryTiming:
    rule: Rule
    median: float
    mean: float
    violations: int


@dataclass(frozen=True)
class BenchRow:
    """Structure, loading time and query times of one encoding of a log."""
    log: str
    encoding: str
    parallel: bool
    cases: int
    nodes: int
    edges: int
    avg_degree: float
    node_pass_time: float
    edge_pass_time: float
    queries: Tuple[QueryTiming, ...] = field(default_factory=tuple)

    @property
    def load_time(self):
        return self.node_pass_time + self.edge_pass_time

    def to_dict(self):
        row = {
            "log": self.log,
            "encoding": self.encoding,
            "parallel": self.parallel,
            "cases": self.cases,
            "nodes": self.nodes,
            "edges": self.edges,
            "avg_degree": round(self.avg_degree, 4),
            "node_pass_s": self.node_pass_time,
            "edge_pass_s": self.edge_pass_time,
            "load_time_s": self.load_time,
        }
        for index, query in enumerate(self.queries, start=1):
            prefix = "query_{}".format(index)
            row[prefix + "_rule"] = format_rule(query.rule)
            row[prefix + "_median_s"] = query.median
            row[prefix + "_mean_s"] = query.mean
            row[prefix + "_violations"] = query.violations
        return row


def _time_queries(config, evaluate):
    """Run every rule warmup + repetitions times.

    Returns:
        tuple: (tuple of QueryTiming, list of ViolationReport)
    """
    timings = []
    reports = []
    for rule in config.rules:
        elapsed = []
        report = None
        for _ in range(config.warmup + config.repetitions):
            start = time.perf_counter()
            report = evaluate(rule)
            elapsed.append(time.perf_counter() - start)
        measured = np.array(elapsed[config.warmup:])
        timings.append(QueryTiming(
            rule=rule,
            median=float(np.median(measured)),
            mean=float(np.mean(measured)),
            violations=len(report.case_ids),
        ))
        reports.append(report)
    return tuple(timings), reports


def _assert_agreement(rules, reports_by_label):
    """Every label must report the same violating cases for every rule."""
    divergent = {}
    labels = list(reports_by_label)
    for index, rule in enumerate(rules):
        reference = set(reports_by_label[labels[0]][index].case_ids)
        cases = set()
        for label in labels[1:]:
            cases |= reference ^ set(reports_by_label[label][index].case_ids)
        if cases:
            divergent[format_rule(rule)] = sorted(cases, key=case_sort_key)

    if divergent:
        logger.error("Encodings disagree: {}".format(divergent))
        raise exceptions.EncodingDisagreementError(
            "Encodings {} disagree on {}".format(
                ", ".join(labels), "; ".join(
                    "{} (cases {})".format(rule, ", ".join(cases))
                    for rule, cases in divergent.items()
                )
            ),
            divergent
        )


def run_bench(config):
    """Encode the log once per encoding and time every rule on it.

    All encodings (and the oracle, when included) must agree on the
    violating cases of every rule.

    Args:
        config (BenchConfig)

    Returns:
        list of BenchRow
    """
    log = config.load_log()
    summary = log_summary(log)
    logger.info("Benchmarking {} rules on {} ({} cases, {} events)".format(
        len(config.rules), config.name, summary.num_cases, summary.num_events
    ))

    rows = []
    reports_by_label = {}
    for kind in config.encodings:
        encoded = encode(log, kind)
        loading = report_for(log, encoded)

        for parallel in (False, True) if config.parallel else (False,):
            queries, reports = _time_queries(
                config,
                lambda rule: check(
                    encoded, rule, parallel=parallel,
                    max_workers=config.max_workers
                )
            )
            label = kind.value + ("+parallel" if parallel else "")
            reports_by_label[label] = reports
            rows.append(BenchRow(
                log=config.name,
                encoding=kind.value,
                parallel=parallel,
                cases=summary.num_cases,
                nodes=loading.actual.num_nodes,
                edges=loading.actual.num_edges,
                avg_degree=loading.actual.avg_degree,
                node_pass_time=loading.node_pass_time,
                edge_pass_time=loading.edge_pass_time,
                queries=queries,
            ))
            logger.info("Row {}: {}".format(label, rows[-1].to_dict()))

    if config.include_oracle:
        queries, reports = _time_queries(
            config, lambda rule: oracle_check(log, rule)
        )
        reports_by_label[ORACLE_ROW] = reports
        rows.append(BenchRow(
            log=config.name, encoding=ORACLE_ROW, parallel=False,
            cases=summary.num_cases, nodes=0, edges=0, avg_degree=0.0,
            node_pass_time=0.0, edge_pass_time=0.0, queries=queries,
        ))

    _assert_agreement(config.rules, reports_by_label)
    return rows


def structure_reference_rows():
    """Forecast graph sizes of the published logs next to their published
    average degrees."""
    rows = []
    for (name, num_cases), counts in PUBLISHED_STRUCTURE.items():
        num_events, num_activities, ep_degree, ua_degree = counts
        published = {
            EncodingKindEnum.EP: ep_degree, EncodingKindEnum.UA: ua_degree
        }
        for kind in EncodingKindEnum:
            forecast = expected_sizes(
                num_cases, num_events, num_activities, kind
            )
            rows.append({
                "log": name,
                "encoding": kind.value,
                "cases": num_cases,
                "nodes": forecast.nodes,
                "edges": forecast.edges,
                "avg_degree": round(forecast.edges / forecast.nodes, 4),
                "published_avg_degree": published.get(kind),
            })
    return rows


def rows_to_frame(rows):
    return pd.DataFrame([
        row.to_dict() if isinstance(row, BenchRow) else row for row in rows
    ])


def format_rows(rows, output_format=OutputFormatEnum.CSV):
    """Render bench rows (or plain dict rows) as CSV or JSON text."""
    if output_format == OutputFormatEnum.JSON:
        return json.dumps(
            [row.to_dict() if isinstance(row, BenchRow) else row
             for row in rows],
            indent=2
        )
    buffer = io.StringIO()
    rows_to_frame(rows).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()
