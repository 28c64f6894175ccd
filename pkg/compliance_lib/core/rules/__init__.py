from .parser import (format_rule, load_rule_file, parse_rule,
                     parse_rule_file)
from .rule import UNRESTRICTED, Rule, TimeWindow, theta_satisfied
from .suite import six_variant_suite

__all__ = [
    "Rule", "TimeWindow", "UNRESTRICTED", "theta_satisfied", "parse_rule",
    "parse_rule_file", "load_rule_file", "format_rule", "six_variant_suite",
]
