"""Vanishing ideals of parameterized subgroups of toric varieties over finite fields."""

from .gf import FqElem, FqField, make_field
from .groebner import Ideal, buchberger, eliminate, ideal_eq
from .intlin import IntMatrix, Lattice
from .limits import BudgetExceeded, budget
from .polyring import MonomialOrder, PolyRing, Polynomial
from .toric import SetupError, ToricSetup, beta_from_phi, validate_setup
from .vanish import (
    VanishingResult,
    condition_holds,
    lattice_L1,
    lattice_L_thm,
    vanishing_via_elimination,
    vanishing_via_lattice,
)

__version__ = "0.1.0"
