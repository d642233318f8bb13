"""Exception types shared across the package.

Two failure modes are kept apart on purpose.  InputError means the caller
handed us something malformed or out of contract (bad syntax, composite
modulus, truncation too short) and maps to exit code 2 in the CLI.
FalsificationError means an internal mathematical invariant that is supposed
to be a theorem failed to hold (an exact division left a remainder, a
structure constant came out non-integral).  That is never a user mistake;
it maps to exit code 3 and should be treated as a bug or a falsified claim.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class FalsificationError(AssertionError):
    """A mathematical invariant the code relies on failed to hold."""
