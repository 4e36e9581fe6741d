"""Small helpers for argument parsing and timing output"""
import logging
from typing import List, Optional

from .errors import BadParameter

log = logging.getLogger("rootcluster.utils")


def parse_int_list(text: str, what: str = "value", minimum: Optional[int] = None) -> List[int]:
    """
    Parse a comma-separated list of integers such as "1,4,2".

    Args:
        text: Raw text; whitespace around items is ignored
        what: Noun used in error messages
        minimum: Smallest accepted value

    Returns:
        The integers in order

    Raises:
        BadParameter: An item is empty, not an integer, or below ``minimum``
    """
    items = [part.strip() for part in text.split(",")]
    values = []
    for pos, item in enumerate(items, 1):
        if not item:
            raise BadParameter(f"Empty {what} at position {pos} in '{text}'")
        try:
            value = int(item)
        except ValueError:
            raise BadParameter(f"Invalid {what} '{item}' at position {pos}")
        if minimum is not None and value < minimum:
            raise BadParameter(f"{what.capitalize()} {value} is below {minimum}")
        values.append(value)
    return values


def parse_points(text: str) -> List[int]:
    """1-based point list, e.g. "1,3" """
    return parse_int_list(text, "point", minimum=1)


def format_duration(seconds: float) -> str:
    """Format seconds into human-readable duration"""
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    elif seconds < 60:
        return f"{seconds:.1f}s"
    else:
        return f"{seconds / 60:.1f}m"
