"""
Engine, firing policy and output format choices.
"""
from enum import Enum


class FiringPolicyKind(Enum):
    """Order in which loaded abacus vertices fire."""
    LOWEST = "lowest"
    HIGHEST = "highest"
    QUEUE = "queue"
    RANDOM = "random"


class Method(Enum):
    """Solution engines exposed by the command line."""
    ABACUS = "abacus"
    MARKOV = "markov"
    CLOSED = "closed"
    MC = "mc"
    ALL = "all"


class OutputFormat(Enum):
    """Rendering formats for command output."""
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


# Methods whose answers are exact rationals
EXACT_METHODS = (Method.ABACUS, Method.MARKOV, Method.CLOSED)
