"""Exception types and resource limits shared across the package."""
import os


class FlowvolError(Exception):
    """Base class for every error raised by flowvol."""


class DagError(FlowvolError, ValueError):
    """Structurally invalid DAG (bad vertex labels, backward edges)."""


class FamilyError(FlowvolError, ValueError):
    """The DAG is not a member of the required full-DAG family."""


class MissingSpineEdgeError(FlowvolError, ValueError):
    def __init__(self, i):
        super().__init__(f"no edge ({i},{i + 1}): the DAG has no spine")
        self.i = i


class PairError(FlowvolError, ValueError):
    """An edge pair is not nested/crossed as an operation requires."""


class NetflowError(FlowvolError, ValueError):
    pass


class LevelError(FlowvolError, ValueError):
    """A partial flow sits at the wrong level of a flow decomposition tree."""


class ClassificationError(FlowvolError, ValueError):
    pass


class RealizabilityError(FlowvolError, ValueError):
    """A rank-1 tree is not the truncated dual of any member of the family."""


class ResourceLimitError(FlowvolError, RuntimeError):
    pass


class CountOverflowError(FlowvolError, OverflowError):
    """A count exceeded the 64-bit unsigned range while checked arithmetic was on."""


UINT64_MAX = 2**64 - 1

MAX_FAMILY_N = 24
MAX_BRUTE_FORCE_N = 7
MAX_ORACLE_ELEMENTS = 10
DEFAULT_MAX_TREE_NODES = 10**7


def max_tree_nodes(override=None):
    """Tree-materialization guard; ``FLOWVOL_MAX_NODES`` wins over the default."""
    if override is not None:
        return override
    env = os.environ.get("FLOWVOL_MAX_NODES")
    if env:
        return int(env)
    return DEFAULT_MAX_TREE_NODES


def checked(value, bigint=False):
    if not bigint and value > UINT64_MAX:
        raise CountOverflowError(f"count {value} does not fit in 64 bits")
    return value
