"""quadralg: exact computer algebra for composition algebras, Jordan modules,
quadrangular algebras of every characteristic-zero type, and the root-group
sequences of the corresponding Moufang quadrangles.

Everything is verified over exact scalars (rationals or rational function
fields), symbolically where sizes permit and by seeded randomized exact
evaluation otherwise.
"""

__version__ = "0.1.0"

from .fields import FieldCtx, MultiPoly, RatFunc, Rational  # noqa: F401
