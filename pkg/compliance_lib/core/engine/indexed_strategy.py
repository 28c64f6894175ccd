from abc import abstractmethod

from ._base import CheckStrategy, OccurrenceJoin, rule_activities, trigger_activity


class IndexedStrategy(CheckStrategy):
    """Strategies that fetch occurrences by activity through an index and
    join them per case."""

    @abstractmethod
    def _occurrences(self, encoded, activity, cases):
        """Occurrences of one activity.

        Returns:
            dict: case id -> list of EventRef (any order)
        """
        pass

    def evaluate(self, encoded, rule, cases=None):
        trigger = trigger_activity(rule)
        per_activity = {trigger: self._occurrences(encoded, trigger, cases)}
        if not per_activity[trigger]:
            return []

        scope = frozenset(per_activity[trigger])
        for activity in rule_activities(rule) - {trigger}:
            per_activity[activity] = self._occurrences(encoded, activity, scope)
        for by_case in per_activity.values():
            for refs in by_case.values():
                refs.sort(key=lambda ref: ref.position)

        join = OccurrenceJoin(rule.window)
        witnesses = []
        for case_id in scope:
            occurrences = {
                activity: by_case.get(case_id, [])
                for activity, by_case in per_activity.items()
            }
            witnesses.extend(join.join(rule, case_id, occurrences))
        return witnesses
