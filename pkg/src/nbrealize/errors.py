"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class StructureAbsent(Exception):
    """A graph or class lacks the structure a decomposition requires.

    Raised when the input is well formed but provably not of the expected
    shape, e.g. a class whose members are not of the form K_s + F[K_{s+1}].
    """
