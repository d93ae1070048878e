"""Exact toolkit for numerical semigroups of small embedding dimension."""
from .core import (
    AperyTable,
    GapSet,
    PseudoFrobeniusSet,
    SemigroupDescriptor,
    WilfReport,
    apery,
    contains,
    frobenius,
    gaps,
    normalize,
    pseudo_frobenius,
    semigroup,
    wilf_check,
)
from .errors import SemigroupError

__version__ = "0.1.0"
