from . import (baseline_strategy, position_strategy, # noqa
               unique_activities_strategy)

from ._base import CheckStrategy
from .checker import check, check_all
from .report import (EventRef, ViolationReport, Witness, reports_to_csv,
                     reports_to_json)

__all__ = [
    "CheckStrategy", "check", "check_all", "EventRef", "Witness",
    "ViolationReport", "reports_to_csv", "reports_to_json",
]
