import io
import json
from dataclasses import dataclass
from typing import Optional, Tuple

import pandas as pd

from ...enums import EncodingKindEnum
from ...logger import logger
from ..rules import Rule, format_rule
from ..utils import case_sort_key

ORACLE_ENCODING_NAME = "oracle"
CSV_COLUMNS = ["case_id", "rule", "trigger_activity", "trigger_position"]


@dataclass(frozen=True)
class EventRef:
    """Activity, position and timestamp of one event of a case."""
    activity: str
    position: int
    timestamp: int

    def to_dict(self):
        return {
            "activity": self.activity,
            "position": self.position,
            "timestamp": self.timestamp,
        }


@dataclass(frozen=True)
class Witness:
    """One violation instance.

    detail is the intervening excluded event for EXCLUDE, otherwise the
    nearest partner that failed the time check (None when the case has no
    partner at all).
    """
    case_id: str
    trigger: EventRef
    detail: Optional[EventRef] = None

    @property
    def sort_key(self):
        return (case_sort_key(self.case_id), self.trigger.position)

    def to_dict(self):
        return {
            "case_id": self.case_id,
            "trigger": self.trigger.to_dict(),
            "detail": self.detail.to_dict() if self.detail else None,
        }


@dataclass(frozen=True)
class ViolationReport:
    rule: Rule
    encoding: Optional[EncodingKindEnum]
    violations: Tuple[Witness, ...]
    elapsed: float = 0.0

    @classmethod
    def from_witnesses(cls, rule, encoding, witnesses, elapsed=0.0):
        """Build a report with witnesses in case then trigger order.

        Args:
            rule (Rule)
            encoding (EncodingKindEnum): None for the oracle
            witnesses (iterable of Witness): any order
            elapsed (float): query duration in seconds

        Returns:
            ViolationReport
        """
        ordered = tuple(sorted(set(witnesses), key=lambda w: w.sort_key))
        report = cls(rule, encoding, ordered, elapsed)
        logger.debug("{} on {}: {} violating cases in {:.4f}s".format(
            format_rule(rule), report.encoding_name, len(report.case_ids),
            elapsed
        ))
        return report

    @property
    def case_ids(self):
        """Distinct violating case ids, sorted."""
        seen = []
        for witness in self.violations:
            if not seen or seen[-1] != witness.case_id:
                seen.append(witness.case_id)
        return tuple(seen)

    @property
    def encoding_name(self):
        if self.encoding is None:
            return ORACLE_ENCODING_NAME
        return self.encoding.value

    def same_findings(self, other):
        """Equal rule and witnesses; encoding and elapsed are ignored."""
        return self.rule == other.rule and self.violations == other.violations

    def to_dict(self):
        return {
            "rule": format_rule(self.rule),
            "encoding": self.encoding_name,
            "elapsed": self.elapsed,
            "case_ids": list(self.case_ids),
            "violations": [witness.to_dict() for witness in self.violations],
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    def to_frame(self):
        rule_text = format_rule(self.rule)
        return pd.DataFrame(
            [
                [
                    witness.case_id, rule_text, witness.trigger.activity,
                    witness.trigger.position
                ]
                for witness in self.violations
            ],
            columns=CSV_COLUMNS,
        )

    def to_csv(self):
        buffer = io.StringIO()
        self.to_frame().to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()


def reports_to_csv(reports):
    """One CSV table holding the witnesses of several reports."""
    frames = [report.to_frame() for report in reports]
    frames = [frame for frame in frames if not frame.empty]
    frame = pd.concat(frames) if frames else pd.DataFrame(columns=CSV_COLUMNS)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def reports_to_json(reports, indent=2):
    return json.dumps([report.to_dict() for report in reports], indent=indent)
