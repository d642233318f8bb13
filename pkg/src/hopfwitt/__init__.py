"""Exact computational algebra for binomial Hopf structures and Witt vectors.

Subpackages by topic:

- poly, series, binomial: sparse rational polynomials, truncated integer
  series, and the binomial-basis transform (the arithmetic substrate).
- intz: the ring of integer-valued polynomials on its binomial basis, with
  its Hopf structure, degree filtration, and the duality pairing against
  Z[[t-1]].
- rings, witt: coefficient rings and truncated big/p-typical Witt vectors,
  universal operation polynomials, (twisted) Frobenii, kernels.
- linalg, filtration: exact integer linear algebra, bounded filtered
  modules with Day tensor and associated graded, the Rees deformation and
  the Drinfeld basis.
- homology: bar and cobar complexes over small graded (co)algebras, with
  integer homology and the shuffle product.
- cli: the command-line interface.

Everything is exact: Python ints and fractions.Fraction throughout, no
floating point anywhere.
"""

__version__ = "0.1.0"

from .errors import FalsificationError, InputError

__all__ = ["FalsificationError", "InputError", "__version__"]
