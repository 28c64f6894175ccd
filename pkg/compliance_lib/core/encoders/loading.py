from ...logger import logger
from ..event_log import log_summary
from ..lpg import graph_stats
from ._base import LogEncoder
from .encoded_log import LoadingReport, expected_sizes


def encode(log, kind):
    """Encode a log with the encoder registered for `kind`.

    Args:
        log (EventLog)
        kind (EncodingKindEnum)

    Returns:
        EncodedLog
    """
    return LogEncoder.get_encoder(kind).encode(log)


def report_for(log, encoded):
    """Loading report of an already encoded log."""
    summary = log_summary(log)
    forecast = expected_sizes(
        summary.num_cases, summary.num_events, summary.num_activities,
        encoded.kind
    )
    report = LoadingReport(
        kind=encoded.kind,
        num_cases=summary.num_cases,
        forecast=forecast,
        actual=graph_stats(encoded.graph),
        timings=encoded.timings,
    )
    if not report.forecast_matches:
        logger.error("Forecast {} differs from actual {}".format(
            forecast, report.actual
        ))
    return report


def loading_report(log, kind):
    """Encode a log and compare its size with the closed-form forecast.

    Returns:
        LoadingReport
    """
    return report_for(log, encode(log, kind))
