"""
Threshold rules: loading them from a rules file and evaluating them
against metric rows.

A rules file is a YAML (or JSON) list of mappings::

    - metric: lcom2
      op: ">"
      limit: 10
      severity: fail

Unknown keys and unknown metric names are configuration errors.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Union

import yaml
from pydantic import ValidationError

from ..errors import ConfigError
from ..models.metrics import MetricsRow
from ..models.report import ThresholdRule, Verdict

logger = logging.getLogger(__name__)

RuleLike = Union[ThresholdRule, dict]


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(p) for p in item["loc"])
        parts.append(f"{where}: {item['msg']}" if where else item["msg"])
    return "; ".join(parts)


def coerce_rules(rules: Iterable[RuleLike]) -> List[ThresholdRule]:
    """
    Validate rules given as models or plain mappings.

    Raises:
        ConfigError: a rule is malformed or names an unknown metric.
    """
    coerced = []
    for index, rule in enumerate(rules, start=1):
        if isinstance(rule, ThresholdRule):
            coerced.append(rule)
            continue
        if not isinstance(rule, dict):
            raise ConfigError(f"rule {index}: expected a mapping, got {type(rule).__name__}")
        try:
            coerced.append(ThresholdRule.model_validate(rule))
        except ValidationError as e:
            raise ConfigError(f"rule {index}: {_validation_message(e)}") from e
    return coerced


def evaluate_thresholds(rows: Sequence[MetricsRow], rules: Iterable[RuleLike]) -> List[Verdict]:
    """
    One verdict per (row, rule) violation, ordered by row then rule.

    Every rule is validated before any row is looked at.

    Raises:
        ConfigError: a rule is invalid.
    """
    checked = coerce_rules(rules)
    verdicts = []
    for row in rows:
        for rule in checked:
            actual = row.metric(rule.metric)
            if rule.violated_by(actual):
                verdicts.append(Verdict(class_fqn=row.class_fqn, rule=rule, actual=actual, severity=rule.severity))

    if verdicts:
        logger.info(f"{len(verdicts)} threshold verdicts from {len(checked)} rules")
    return verdicts


def load_rules(path: Union[str, Path]) -> List[ThresholdRule]:
    """
    Read a rules file. An empty file means no rules.

    Raises:
        ConfigError: the file is missing, unreadable, not a list, or holds an invalid rule.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"rules file {path}: not found")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"rules file {path}: {e}") from e

    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f"rules file {path}: {e}") from e

    if document is None:
        return []
    if not isinstance(document, list):
        raise ConfigError(f"rules file {path}: expected a list of rules")

    try:
        rules = coerce_rules(document)
    except ConfigError as e:
        raise ConfigError(f"rules file {path}: {e.message}") from e

    logger.info(f"Loaded {len(rules)} rules from {path}")
    return rules
