from abc import ABCMeta, abstractmethod
from bisect import bisect_right

from ... import exceptions
from ...enums import RuleKindEnum, ThetaEnum
from ...logger import logger
from ..lpg import property_difference
from ..utils import SubclassesMixin
from .report import Witness

# Thetas met by the smallest elapsed time whenever any candidate meets them.
SMALLEST_ELAPSED_THETAS = frozenset([ThetaEnum.LT, ThetaEnum.LE])
LARGEST_ELAPSED_THETAS = frozenset([ThetaEnum.GT, ThetaEnum.GE])


class CheckStrategy(SubclassesMixin, metaclass=ABCMeta):
    """Evaluates rules against one kind of encoded log.

    Subclasses set the `encoding` attribute.
    """

    @classmethod
    def get_strategy(cls, kind):
        subclasses_dict = cls._get_subclasses_dict("encoding")
        if kind not in subclasses_dict:
            logger.error("No check strategy for {!r}".format(kind))
            raise exceptions.UnknownEncodingError(
                "Check strategy {!r} not implemented".format(kind)
            )
        logger.debug("Check strategy: {}".format(subclasses_dict[kind]))

        return subclasses_dict[kind]()

    @abstractmethod
    def evaluate(self, encoded, rule, cases=None):
        """Find the violations of a rule.

        Args:
            encoded (EncodedLog): frozen
            rule (Rule)
            cases (set): restrict evaluation to these case ids

        Returns:
            list of Witness, unordered
        """
        pass


class OccurrenceJoin:
    """Per-case join over occurrence lists sorted by position.

    Inside a trace timestamps never decrease with position, so the elapsed
    time to a later partner grows along the list and only one end of the
    candidate range has to be compared for <, <=, > and >=.
    """

    def __init__(self, window):
        self._window = window

    def _any_admitted(self, elapsed_values, smallest_first):
        theta = self._window.theta
        if not elapsed_values:
            return False
        if theta in SMALLEST_ELAPSED_THETAS:
            probe = elapsed_values[0] if smallest_first else elapsed_values[-1]
            return self._window.admits(probe)
        if theta in LARGEST_ELAPSED_THETAS:
            probe = elapsed_values[-1] if smallest_first else elapsed_values[0]
            return self._window.admits(probe)
        return any(self._window.admits(value) for value in elapsed_values)

    def response(self, case_id, triggers, partners):
        positions = [partner.position for partner in partners]
        witnesses = []
        for trigger in triggers:
            later = partners[bisect_right(positions, trigger.position):]
            elapsed = [
                property_difference(partner.timestamp, trigger.timestamp)
                for partner in later
            ]
            if not self._any_admitted(elapsed, smallest_first=True):
                witnesses.append(
                    Witness(case_id, trigger, later[0] if later else None)
                )
        return witnesses

    def precedes(self, case_id, triggers, partners):
        positions = [partner.position for partner in partners]
        witnesses = []
        for trigger in triggers:
            # the trigger itself counts when a = b
            earlier = partners[:bisect_right(positions, trigger.position)]
            elapsed = [
                property_difference(trigger.timestamp, partner.timestamp)
                for partner in earlier
            ]
            if not self._any_admitted(elapsed, smallest_first=False):
                witnesses.append(
                    Witness(case_id, trigger, earlier[-1] if earlier else None)
                )
        return witnesses

    def exclude(self, case_id, triggers, partners, blockers):
        partner_positions = [partner.position for partner in partners]
        blocker_positions = [blocker.position for blocker in blockers]
        witnesses = []
        for trigger in triggers:
            index = bisect_right(blocker_positions, trigger.position)
            if index == len(blockers):
                continue
            blocker = blockers[index]
            beyond = partners[bisect_right(partner_positions, blocker.position):]
            elapsed = [
                property_difference(partner.timestamp, trigger.timestamp)
                for partner in beyond
            ]
            if self._any_admitted(elapsed, smallest_first=True):
                witnesses.append(Witness(case_id, trigger, blocker))
        return witnesses

    def join(self, rule, case_id, occurrences):
        """Witnesses of one case.

        Args:
            rule (Rule)
            case_id (string)
            occurrences (dict): activity -> list of EventRef in position order

        Returns:
            list of Witness
        """
        def of(activity):
            return occurrences.get(activity, [])

        if rule.kind == RuleKindEnum.RESPONSE:
            return self.response(case_id, of(rule.a), of(rule.b))
        if rule.kind == RuleKindEnum.PRECEDES:
            return self.precedes(case_id, of(rule.b), of(rule.a))

        blockers = sorted(
            {
                blocker
                for activity in set(rule.excluded)
                for blocker in of(activity)
            },
            key=lambda blocker: blocker.position
        )
        return self.exclude(case_id, of(rule.a), of(rule.b), blockers)


def rule_activities(rule):
    """Activities whose occurrences a rule reads."""
    return {rule.a, rule.b, *rule.excluded}


def trigger_activity(rule):
    if rule.kind == RuleKindEnum.PRECEDES:
        return rule.b
    return rule.a
