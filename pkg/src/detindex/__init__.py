"""detindex: exact indices of 1-forms on determinantal singularities.

The engine computes Poincare-Hopf-Nash indices, local Euler obstructions of
1-forms and function germs, polar multiplicities and determinantal Milnor
numbers from raw matrix/1-form input, using exact Groebner and standard
basis computations over the rationals or a large prime field.
"""

__version__ = "0.1.0"

from .fields import FieldSpec, RATIONALS, prime_field
from .orders import DEGREVLEX, NEGDEGREVLEX, MonomialOrder, compare, elimination_order
from .poly import OneForm, Polynomial
from .rings import RingContext, ring
from .parsing import ParseDiagnostic, parse_polynomial, parse_rational

__all__ = [
    "FieldSpec",
    "RATIONALS",
    "prime_field",
    "DEGREVLEX",
    "NEGDEGREVLEX",
    "MonomialOrder",
    "compare",
    "elimination_order",
    "OneForm",
    "Polynomial",
    "RingContext",
    "ring",
    "ParseDiagnostic",
    "parse_polynomial",
    "parse_rational",
    "__version__",
]
