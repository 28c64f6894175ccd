import configparser

from .. import exceptions
from ..constants import (APP_CONFIG, DEFAULT_ACTIVITY_COLUMN,
                         DEFAULT_CASE_COLUMN, DEFAULT_COMPLETE_TIME_COLUMN,
                         DEFAULT_LIFECYCLE_COLUMN, DEFAULT_MAX_WORKERS,
                         DEFAULT_REPETITIONS, DEFAULT_RESOURCE_COLUMN,
                         DEFAULT_START_TIME_COLUMN, DEFAULT_TIME_PREFERENCE,
                         DEFAULT_TIMESTAMP_COLUMN, DEFAULT_WARMUP)
from ..enums import OutputFormatEnum, TimePreferenceEnum
from ..logger import logger


class Settings:
    """Settings read from app.cfg.

    Properties:
        column_config
            ColumnConfig with the default CSV column names.

        repetitions, warmup, max_workers, output_format
            Benchmark defaults.
    """

    def __init__(self, config_path=APP_CONFIG):
        self._config = configparser.ConfigParser()
        read_files = self._config.read(config_path)
        if not read_files:
            logger.info(
                "Config \"{}\" not found, using built-in defaults".format(
                    config_path
                )
            )
        else:
            logger.debug("Loaded config from \"{}\"".format(config_path))

    def _get(self, section, option, fallback):
        return self._config.get(section, option, fallback=fallback)

    def _get_positive_int(self, section, option, fallback, minimum=1):
        try:
            value = self._config.getint(section, option, fallback=fallback)
        except ValueError:
            raise exceptions.InvalidBenchConfigError(
                "Option \"{}.{}\" must be an integer".format(section, option)
            )
        if value < minimum:
            raise exceptions.InvalidBenchConfigError(
                "Option \"{}.{}\" must be >= {}".format(
                    section, option, minimum
                )
            )
        return value

    def _get_enum(self, section, option, enum, fallback):
        value = self._get(section, option, fallback.value)
        try:
            return enum(value.strip().lower())
        except ValueError:
            raise exceptions.InvalidBenchConfigError(
                "Option \"{}.{}\" must be one of {}, got {!r}".format(
                    section, option, ", ".join(m.value for m in enum), value
                )
            )

    @property
    def column_config(self):
        from .event_log import ColumnConfig

        return ColumnConfig(
            case_column=self._get("columns", "case", DEFAULT_CASE_COLUMN),
            activity_column=self._get(
                "columns", "activity", DEFAULT_ACTIVITY_COLUMN
            ),
            timestamp_column=self._get(
                "columns", "timestamp", DEFAULT_TIMESTAMP_COLUMN
            ),
            start_time_column=self._get(
                "columns", "start_time", DEFAULT_START_TIME_COLUMN
            ),
            complete_time_column=self._get(
                "columns", "complete_time", DEFAULT_COMPLETE_TIME_COLUMN
            ),
            resource_column=self._get(
                "columns", "resource", DEFAULT_RESOURCE_COLUMN
            ),
            lifecycle_column=self._get(
                "columns", "lifecycle", DEFAULT_LIFECYCLE_COLUMN
            ),
            time_preference=self._get_enum(
                "columns", "time_preference", TimePreferenceEnum,
                DEFAULT_TIME_PREFERENCE
            ),
        )

    @property
    def repetitions(self):
        return self._get_positive_int(
            "bench", "repetitions", DEFAULT_REPETITIONS
        )

    @property
    def warmup(self):
        return self._get_positive_int(
            "bench", "warmup", DEFAULT_WARMUP, minimum=0
        )

    @property
    def max_workers(self):
        return self._get_positive_int(
            "bench", "max_workers", DEFAULT_MAX_WORKERS
        )

    @property
    def output_format(self):
        return self._get_enum(
            "bench", "output", OutputFormatEnum, OutputFormatEnum.CSV
        )
