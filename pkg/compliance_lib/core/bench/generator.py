import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ... import exceptions
from ...constants import (ACTIVITY_NAME_TEMPLATE, GENERATOR_BASE_TIMESTAMP,
                          GENERATOR_CASE_SPREAD, GENERATOR_MAX_GAP,
                          GENERATOR_MIN_GAP, PUBLISHED_STRUCTURE)
from ...logger import logger
from ..event_log import Event, EventLog, Trace

LENGTH_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


@dataclass(frozen=True)
class GeneratorParams:
    """Shape of a synthetic log.

    Trace lengths are drawn uniformly from [min_len, max_len] unless
    total_events is given, in which case they are spread as evenly as
    possible so that the log has exactly that many events. With `ordered`
    the activity index grows with the position in the trace, so that
    low-index activities come early and high-index ones late.
    """
    num_cases: int
    min_len: int
    max_len: int
    num_activities: int
    seed: int = 0
    ordered: bool = False
    total_events: Optional[int] = None

    def __post_init__(self):
        errors = []
        if self.num_cases < 0:
            errors.append("num_cases must be >= 0")
        if self.min_len < 1:
            errors.append("min_len must be >= 1")
        if self.max_len < self.min_len:
            errors.append("max_len must be >= min_len")
        if self.num_activities < 1:
            errors.append("num_activities must be >= 1")
        if self.seed < 0:
            errors.append("seed must be >= 0")
        if self.total_events is not None and not (
            self.num_cases * self.min_len
            <= self.total_events
            <= self.num_cases * self.max_len
        ):
            errors.append(
                "total_events must lie between num_cases * min_len "
                "and num_cases * max_len"
            )
        if errors:
            logger.error("Invalid generator parameters: {}".format(errors))
            raise exceptions.InvalidGeneratorParametersError(
                "; ".join(errors), additional_info=self
            )

    @classmethod
    def from_string(cls, text):
        """Read `cases=N,len=MIN..MAX,acts=N,seed=N[,ordered=1]`.

        `len=N` fixes every trace length to N.
        """
        fields = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            key, sep, value = item.partition("=")
            if not sep:
                raise exceptions.InvalidGeneratorParametersError(
                    "Expected key=value, found \"{}\"".format(item)
                )
            fields[key.strip()] = value.strip()

        try:
            length = LENGTH_RANGE_RE.match(fields.pop("len", "1"))
            if length is None:
                raise ValueError("len")
            params = cls(
                num_cases=int(fields.pop("cases")),
                min_len=int(length.group(1)),
                max_len=int(length.group(2) or length.group(1)),
                num_activities=int(fields.pop("acts")),
                seed=int(fields.pop("seed", 0)),
                ordered=fields.pop("ordered", "0").lower() in (
                    "1", "true", "yes"
                ),
            )
        except (KeyError, ValueError) as e:
            raise exceptions.InvalidGeneratorParametersError(
                "Malformed generator parameters \"{}\": {}".format(text, e)
            ) from e
        if fields:
            raise exceptions.InvalidGeneratorParametersError(
                "Unknown generator parameters {}".format(sorted(fields))
            )
        return params

    def describe(self):
        return "cases={},len={}..{},acts={},seed={}".format(
            self.num_cases, self.min_len, self.max_len,
            self.num_activities, self.seed
        )


def bpic_shaped_params(log_name="BPIC'12", seed=0):
    """Parameters reproducing the case, event and activity counts of one
    of the published logs."""
    for (name, num_cases), counts in PUBLISHED_STRUCTURE.items():
        if name != log_name:
            continue
        num_events, num_activities = counts[0], counts[1]
        return GeneratorParams(
            num_cases=num_cases,
            min_len=num_events // num_cases,
            max_len=-(-num_events // num_cases),
            num_activities=num_activities,
            seed=seed,
            total_events=num_events,
        )
    raise exceptions.InvalidGeneratorParametersError(
        "Unknown log \"{}\"".format(log_name)
    )


def _trace_lengths(params, rng):
    if params.total_events is None:
        return rng.integers(
            params.min_len, params.max_len + 1, size=params.num_cases
        )
    base, remainder = divmod(params.total_events, params.num_cases or 1)
    lengths = np.full(params.num_cases, base)
    lengths[rng.permutation(params.num_cases)[:remainder]] += 1
    return lengths


def _activity_indexes(params, rng, length):
    count = params.num_activities
    if not params.ordered:
        return rng.integers(0, count, size=length)
    centres = (np.arange(length) + 0.5) / length * count - 0.5
    noise = rng.normal(0.0, max(1.0, count / 10), size=length)
    return np.clip(np.rint(centres + noise), 0, count - 1).astype(int)


def gen_log(params):
    """Generate a random log.

    Timestamps strictly increase inside a case, with gaps drawn from
    [GENERATOR_MIN_GAP, GENERATOR_MAX_GAP] seconds. The same params always
    give the same log.

    Args:
        params (GeneratorParams)

    Returns:
        EventLog
    """
    rng = np.random.default_rng(params.seed)
    lengths = _trace_lengths(params, rng)
    starts = GENERATOR_BASE_TIMESTAMP + rng.integers(
        0, GENERATOR_CASE_SPREAD, size=params.num_cases
    )

    traces = []
    for index in range(params.num_cases):
        case_id = str(index + 1)
        length = int(lengths[index])
        gaps = rng.integers(
            GENERATOR_MIN_GAP, GENERATOR_MAX_GAP + 1, size=length
        )
        timestamps = int(starts[index]) + np.cumsum(gaps)
        activities = _activity_indexes(params, rng, length)
        traces.append(Trace(case_id, tuple(
            Event(
                case_id=case_id,
                activity=ACTIVITY_NAME_TEMPLATE.format(int(activity)),
                timestamp=int(timestamp),
                position=position,
            )
            for position, (activity, timestamp) in enumerate(
                zip(activities, timestamps), start=1
            )
        )))

    log = EventLog(traces)
    logger.info("Generated {!r} from {}".format(log, params.describe()))
    return log
