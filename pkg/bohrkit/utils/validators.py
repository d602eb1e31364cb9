"""
BOHRKIT Validators Module

Input validation shared by the library operations and the CLI.
Every failed check raises ValidationError naming the offending field.
"""

import math
from dataclasses import fields
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from ..core.errors import ValidationError


def validate_positive_int(value: Any, field_name: str = "value", minimum: int = 1) -> int:
    """
    Validate that value is an integer no smaller than minimum.

    Args:
        value: Value to validate
        field_name: Name of the field for error messages
        minimum: Smallest accepted value

    Returns:
        Validated integer
    """
    try:
        int_val = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{field_name} must be an integer", field=field_name)
    if int_val != value and not isinstance(value, str):
        raise ValidationError(f"{field_name} must be an integer, got {value!r}", field=field_name)
    if int_val < minimum:
        raise ValidationError(f"{field_name} must be >= {minimum}, got {int_val}", field=field_name)
    return int_val


def validate_real(
    value: Any,
    field_name: str = "value",
    low: Optional[float] = None,
    high: Optional[float] = None,
    low_open: bool = False,
    high_open: bool = False
) -> float:
    """
    Validate a finite real inside an optionally half-open interval.

    Args:
        value: Value to validate
        field_name: Name of the field for error messages
        low, high: Interval ends (None for unbounded)
        low_open, high_open: Whether the corresponding end is excluded

    Returns:
        Validated float
    """
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{field_name} must be a number", field=field_name)
    if not math.isfinite(x):
        raise ValidationError(f"{field_name} must be finite, got {x}", field=field_name)

    if low is not None and (x < low or (low_open and x == low)):
        bracket = "(" if low_open else "["
        raise ValidationError(f"{field_name} must lie in {bracket}{low}, ...; got {x}", field=field_name)
    if high is not None and (x > high or (high_open and x == high)):
        bracket = ")" if high_open else "]"
        raise ValidationError(f"{field_name} must lie in ..., {high}{bracket}; got {x}", field=field_name)
    return x


def validate_open_disk(value: Any, field_name: str = "alpha") -> complex:
    """Validate a complex number of modulus strictly below one."""
    try:
        z = complex(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{field_name} must be a complex number", field=field_name)
    if not abs(z) < 1.0:
        raise ValidationError(f"|{field_name}| must be < 1, got {abs(z)}", field=field_name)
    return z


def validate_nonnegative(values: Sequence[float], field_name: str = "norms") -> List[float]:
    """Validate a sequence of nonnegative reals."""
    result = [float(v) for v in values]
    for i, v in enumerate(result):
        if v < 0 or not math.isfinite(v):
            raise ValidationError(f"{field_name}[{i}] must be a nonnegative real, got {v}", field=field_name)
    return result


def validate_choice(value: str, valid: Sequence[str], field_name: str) -> str:
    """Validate that value is one of the listed names."""
    if value not in valid:
        raise ValidationError(
            f"Invalid {field_name}: {value}. Valid: {', '.join(valid)}",
            field=field_name
        )
    return value


def validate_config_key(key: str, sections: Mapping[str, type]) -> Tuple[str, str]:
    """
    Validate and parse a configuration key in dot notation.

    Args:
        key: Configuration key (e.g., "numerics.tol")
        sections: Section name to its settings dataclass

    Returns:
        Tuple of (section, setting)
    """
    parts = key.split('.')
    if len(parts) != 2:
        raise ValidationError(
            f"Invalid config key format: {key}. Use 'section.setting' format.",
            field="key"
        )
    if parts[0] not in sections:
        raise ValidationError(
            f"Unknown config section: {parts[0]}. Valid: {', '.join(sections)}",
            field="key"
        )
    settings = [f.name for f in fields(sections[parts[0]])]
    if parts[1] not in settings:
        raise ValidationError(
            f"Unknown setting in {parts[0]}: {parts[1]}. Valid: {', '.join(settings)}",
            field="key"
        )
    return parts[0], parts[1]
