from . import exceptions
from .core import bench, encoders, engine, event_log, oracle, rules
from .core.environment import ExecutionEnvironment
from .enums import EncodingKindEnum
from .logger import logger


class ComplianceClientAPI:
    def __init__(self):
        self._env = ExecutionEnvironment()

    @property
    def settings(self):
        return self._env.settings

    def load(self, path, column_config=None):
        """Parse a CSV event log.

        Args:
            path (string)
            column_config (ColumnConfig): app.cfg columns when None

        Returns:
            EventLog
        """
        if column_config is None:
            column_config = self._env.settings.column_config
        return event_log.load_event_log(path, column_config)

    def summarize(self, log):
        return event_log.log_summary(log)

    def encode(self, log, kind):
        """Build the graph of a log.

        Args:
            log (EventLog)
            kind (EncodingKindEnum|string): "bm", "ep" or "ua"

        Returns:
            EncodedLog
        """
        return encoders.encode(log, self._encoding(kind))

    def loading_report(self, log, kind):
        return encoders.loading_report(log, self._encoding(kind))

    def parse_rule(self, text):
        return rules.parse_rule(text)

    def load_rules(self, path):
        return rules.load_rule_file(path)

    def check(self, encoded, rule, parallel=False):
        """Check one rule; `rule` may be a Rule or its text.

        Returns:
            ViolationReport
        """
        return engine.check(
            encoded, self._rule(rule), parallel=parallel,
            max_workers=self._env.settings.max_workers
        )

    def check_all(self, encoded, rule_list):
        return engine.check_all(
            encoded, [self._rule(rule) for rule in rule_list],
            max_workers=self._env.settings.max_workers
        )

    def oracle_check(self, log, rule):
        return oracle.oracle_check(log, self._rule(rule))

    def generate(self, params):
        """Generate a log from GeneratorParams or their text form."""
        if isinstance(params, str):
            params = bench.GeneratorParams.from_string(params)
        return bench.gen_log(params)

    def bench(self, config):
        return bench.run_bench(config)

    @staticmethod
    def _encoding(kind):
        if isinstance(kind, EncodingKindEnum):
            return kind
        try:
            return EncodingKindEnum(str(kind).lower())
        except ValueError:
            logger.error("Unknown encoding {!r}".format(kind))
            raise exceptions.UnknownEncodingError(
                "Unknown encoding {!r}, expected one of {}".format(
                    kind, ", ".join(k.value for k in EncodingKindEnum)
                )
            )

    @staticmethod
    def _rule(rule):
        if isinstance(rule, str):
            return rules.parse_rule(rule)
        return rule


compliance = ComplianceClientAPI()
