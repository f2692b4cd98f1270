"""Young-tableau calculus for Richardson orbital varieties in sl_n."""

from ._validation import BoundExceededError, InvalidInputError
from .partitions import Partition
from .richardson import ChainForm, SimpleRootSubset
from .tableaux import Tableau
from .words import Word

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "ChainForm",
    "InvalidInputError",
    "Partition",
    "SimpleRootSubset",
    "Tableau",
    "Word",
]
