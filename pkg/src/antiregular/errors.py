"""Shared exception types."""


class GuardExceeded(Exception):
    """An input is larger than the instance-size guard of the operation.

    Guards exist to keep exponential enumerations from running away; callers
    that know what they are doing may disable them explicitly.
    """
