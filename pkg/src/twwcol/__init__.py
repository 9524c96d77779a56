"""Twin-width witnesses, nice vertex orders and generalized colouring numbers."""

from .errors import (
    DisconnectedGraphError,
    DomainError,
    FormatError,
    InvalidSequenceError,
    NotACographError,
    ResourceLimitError,
    SigningError,
    SizeGuardError,
    TwwColError,
)
from .graph import INFINITE, Graph, bomega, degeneracy, distance_paths, girth
from .order import LinearOrder
from .trigraph import (
    ContractionSequence,
    Trigraph,
    UniverseIndex,
    contract,
    exact_tww,
    initial_trigraph,
    quotient_trigraph,
    universe,
    width,
)
from .nice_ordering import (
    annotate_nice,
    cograph_order,
    nice_order,
    nice_order_incremental,
    nice_order_per_component,
)
from .reachability import backconn, exact_param, profile, sreach, wreach

__all__ = [
    "DisconnectedGraphError",
    "DomainError",
    "FormatError",
    "InvalidSequenceError",
    "NotACographError",
    "ResourceLimitError",
    "SigningError",
    "SizeGuardError",
    "TwwColError",
    "INFINITE",
    "Graph",
    "bomega",
    "degeneracy",
    "distance_paths",
    "girth",
    "LinearOrder",
    "ContractionSequence",
    "Trigraph",
    "UniverseIndex",
    "contract",
    "exact_tww",
    "initial_trigraph",
    "quotient_trigraph",
    "universe",
    "width",
    "annotate_nice",
    "cograph_order",
    "nice_order",
    "nice_order_incremental",
    "nice_order_per_component",
    "backconn",
    "exact_param",
    "profile",
    "sreach",
    "wreach",
]

__version__ = "0.1.0"
