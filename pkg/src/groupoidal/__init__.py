"""Finite inverse semigroups: the natural order, closed inverse
subsemigroups and their cosets, the coset semigroup K(S) and its
subsemigroup L(S), Paterson's groupoid, transitive actions and exact
irreducible representations."""

from .core import FiniteInverseSemigroup, TransitiveAction, green_data, schutzenberger_action
from .errors import CapExceededError, UnsupportedFieldError, ValidationError
from .families import brandt, builtin, chain, inverse_symmetric
from .partial_perm import PartialPerm

__version__ = "0.1.0"

__all__ = [
    "FiniteInverseSemigroup",
    "TransitiveAction",
    "PartialPerm",
    "green_data",
    "schutzenberger_action",
    "inverse_symmetric",
    "chain",
    "brandt",
    "builtin",
    "ValidationError",
    "CapExceededError",
    "UnsupportedFieldError",
]
