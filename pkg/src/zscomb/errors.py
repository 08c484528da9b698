"""Exception types shared across the package."""


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    Every counting formula in this package divides an integer divisor sum by a
    group order (or by a+b for rational Catalan numbers), and the result is a
    cardinality, so the division can only fail if the implementation is wrong.
    """


class EnumerationLimitError(RuntimeError):
    """A brute-force enumeration would exceed its candidate budget."""
