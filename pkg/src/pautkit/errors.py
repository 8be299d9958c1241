"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Malformed or mutually inconsistent arguments."""


class TooLarge(RuntimeError):
    """An exact computation was refused because it exceeds its size guard."""


class NotFixed(InvalidInput):
    """A word required to be fixed by a permutation is not."""


class NotInvariant(InvalidInput):
    """A code required to be invariant under a permutation is not."""
