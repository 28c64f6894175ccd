import concurrent.futures
import time

from ... import exceptions
from ...logger import logger
from ..environment import ExecutionEnvironment
from ..rules import format_rule
from ..utils import case_sort_key
from ._base import CheckStrategy
from .report import ViolationReport


def _partition(case_ids, parts):
    ordered = sorted(case_ids, key=case_sort_key)
    size = max(1, -(-len(ordered) // parts))
    return [
        frozenset(ordered[start:start + size])
        for start in range(0, len(ordered), size)
    ]


def _max_workers(max_workers):
    if max_workers is None:
        return ExecutionEnvironment().settings.max_workers
    if max_workers < 1:
        raise exceptions.InvalidBenchConfigError(
            "max_workers must be >= 1, got {}".format(max_workers)
        )
    return max_workers


def check(encoded, rule, parallel=False, max_workers=None):
    """Evaluate a rule with the strategy of the log's encoding.

    Args:
        encoded (EncodedLog): frozen
        rule (Rule)
        parallel (bool): split the cases into partitions evaluated
            on a thread pool
        max_workers (int): pool size, app.cfg default when None

    Returns:
        ViolationReport
    """
    if not encoded.graph.is_frozen:
        logger.error("Check requested on an unfrozen graph")
        raise exceptions.FrozenGraphError(
            "Encoded graph must be frozen before checking"
        )

    strategy = CheckStrategy.get_strategy(encoded.kind)
    logger.debug("Checking {} with {}".format(
        format_rule(rule), type(strategy).__name__
    ))

    start = time.perf_counter()
    if parallel:
        workers = _max_workers(max_workers)
        partitions = _partition(encoded.case_nodes, workers)
        witnesses = []
        with concurrent.futures.ThreadPoolExecutor(workers) as executor:
            for partial in executor.map(
                lambda cases: strategy.evaluate(encoded, rule, cases),
                partitions
            ):
                witnesses.extend(partial)
    else:
        witnesses = strategy.evaluate(encoded, rule)
    elapsed = time.perf_counter() - start

    return ViolationReport.from_witnesses(
        rule, encoded.kind, witnesses, elapsed
    )


def check_all(encoded, rules, max_workers=None):
    """Check several rules against one encoded log.

    Rules run concurrently on a thread pool; reports come back in rule
    order.

    Returns:
        list of ViolationReport
    """
    rules = list(rules)
    if not rules:
        return []

    workers = min(_max_workers(max_workers), len(rules))
    logger.info("Checking {} rules on {} with {} workers".format(
        len(rules), encoded.kind.name, workers
    ))
    if workers == 1:
        return [check(encoded, rule) for rule in rules]

    with concurrent.futures.ThreadPoolExecutor(workers) as executor:
        return list(executor.map(lambda rule: check(encoded, rule), rules))
