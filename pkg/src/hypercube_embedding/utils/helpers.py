"""
Utility helper functions for the hypercube embedding toolkit.
"""
import math
import os
import re
from typing import Any, Dict, Iterable, NamedTuple, Optional


def substitute_env_variables(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Recursively substitute environment variables in configuration.

    Supports ${VAR_NAME} and ${VAR_NAME:default_value} syntax.

    Args:
        config: Configuration dictionary

    Returns:
        Configuration with substituted values
    """
    if isinstance(config, dict):
        return {k: substitute_env_variables(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [substitute_env_variables(item) for item in config]
    elif isinstance(config, str):
        return _substitute_string(config)
    return config


def _substitute_string(value: str) -> str:
    """Substitute environment variables in a string."""
    pattern = r'\$\{([^:}]+)(?::([^}]*))?\}'

    def replacer(match):
        var_name = match.group(1)
        default_value = match.group(2) if match.group(2) is not None else ''
        return os.environ.get(var_name, default_value)

    return re.sub(pattern, replacer, value)


def is_power_of_two(n: int) -> bool:
    """True for 1, 2, 4, 8, ..."""
    return n >= 1 and n & (n - 1) == 0


def exact_log2(n: int) -> int:
    """
    Base-2 logarithm of a power of two.

    Raises:
        ValueError: If n is not a power of two
    """
    if not is_power_of_two(n):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


EXACT_SPACE_LIMIT = 10 ** 30


class SpaceSize(NamedTuple):
    """Size of a rotation-system space: exact up to ``EXACT_SPACE_LIMIT``, always as log10."""

    exact: Optional[int]
    log10: float

    def exceeds(self, budget: int) -> bool:
        if self.exact is not None:
            return self.exact > budget
        return budget <= EXACT_SPACE_LIMIT or self.log10 > math.log10(budget)

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f"~10^{self.log10:.1f}"


def rotation_space_size(degrees: Iterable[int], limit: Optional[int] = None) -> Optional[int]:
    """
    Number of rotation systems: product of (deg - 1)! over all vertices.

    With ``limit`` the product stops growing as soon as it passes the limit
    and None is returned.
    """
    size = 1
    for degree in degrees:
        size *= math.factorial(max(degree - 1, 0))
        if limit is not None and size > limit:
            return None
    return size


def rotation_space(degrees: Iterable[int]) -> SpaceSize:
    degrees = list(degrees)
    log10 = sum(math.lgamma(max(degree, 1)) for degree in degrees) / math.log(10)
    return SpaceSize(rotation_space_size(degrees, limit=EXACT_SPACE_LIMIT), round(log10, 6))


def format_duration(seconds: float) -> str:
    """Format duration in human-readable format."""
    if seconds < 60:
        return f"{seconds:.2f}s"
    elif seconds < 3600:
        minutes = seconds / 60
        return f"{minutes:.2f}m"
    else:
        hours = seconds / 3600
        return f"{hours:.2f}h"
