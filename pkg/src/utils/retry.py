"""Retry decorator that doubles a search radius until the result is certified"""
import functools
import logging

from src.config import Config
from src.errors import CertificationError

logger = logging.getLogger(__name__)


class BoundNotCertified(Exception):
    """Raised inside a bounded search to ask for a larger radius."""


def doubling_radius(max_doublings=None):
    """
    Decorator for retrying a bounded search with a doubled radius

    The wrapped function takes a keyword argument `radius` and raises
    BoundNotCertified when its result cannot be trusted at that radius.

    Args:
        max_doublings: Maximum number of doublings before giving up
    """
    max_doublings = max_doublings or Config.BOX_DOUBLINGS

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, radius, **kwargs):
            for attempt in range(max_doublings + 1):
                try:
                    return func(*args, radius=radius, **kwargs)
                except BoundNotCertified as e:
                    logger.debug(f"{func.__name__}: radius {radius} not certified ({e}), doubling")
                    radius *= 2
            raise CertificationError(
                f"{func.__name__} could not certify its bound after {max_doublings} doublings")

        return wrapper
    return decorator
