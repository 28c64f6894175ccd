from . import (baseline, explicit_position, unique_activities) # noqa

from ._base import LogEncoder
from .encoded_log import (EncodedLog, LoadingReport, PassTimings,
                          SizeForecast, expected_sizes)
from .loading import encode, loading_report, report_for

__all__ = [
    "LogEncoder", "EncodedLog", "LoadingReport", "PassTimings",
    "SizeForecast", "expected_sizes", "encode", "loading_report",
    "report_for",
]
