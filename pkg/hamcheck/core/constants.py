# -*- encoding: utf-8 -*-
from enum import IntEnum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


# graph6 format (nauty formats.txt)
GRAPH6_HEADER = b">>graph6<<"
GRAPH6_BIAS = 63
GRAPH6_MAX_BYTE = 126
GRAPH6_LONG_MARKER = 126
GRAPH6_CHUNK_BITS = 6
GRAPH6_SHORT_MAX = 62
GRAPH6_MEDIUM_MAX = 258047
GRAPH6_MAX_ORDER = 2**36 - 1

# Search limits
DEFAULT_ORACLE_BOUND = 10
DEFAULT_CYCLE_CAP = 10**6
ENUMERATION_CEILING = 8
DEFAULT_MIN_ORDER = 3
DEFAULT_CHUNK_SIZE = 256


class Direction(StrEnum):
    FORWARD = "forward"
    REVERSE = "reverse"


class Outcome(StrEnum):
    HYPOTHESIS_UNMET = "hypothesis-unmet"
    HOLDS = "holds"
    VIOLATION = "VIOLATION"
    # Dominating-cycle enumeration ran past its cap
    UNKNOWN = "unknown"


class SpecStatus(StrEnum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"


class Predicate(StrEnum):
    HAMILTONIAN = "hamiltonian"
    DOMINATING = "every-longest-cycle-dominating"


class CertificateKind(StrEnum):
    HAMILTON_CYCLE = "hamilton_cycle"
    CYCLE_OF_ORDER_P = "cycle_of_order_p"
    REFUTATION = "refutation"


class MoveKind(StrEnum):
    ABSORB = "absorb-consecutive"
    CROSSING = "crossing-chord-case1"
    CHORD_PAIR = "chord-pair-case1"
    ROTATION = "segment-rotation-case22"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    HUMAN = "human"


class ExitCode(IntEnum):
    OK = 0
    INTERNAL = 1
    INPUT = 2
    VIOLATION = 3
