"""Shared finite-difference stencils used as oracles across test modules."""


def diff5(f, x, h):
    """Five-point central first derivative."""
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def diff2_5(f, x, h):
    """Five-point central second derivative."""
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x)
            + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h)


def central(f, x, h):
    """Plain central first difference."""
    return (f(x + h) - f(x - h)) / (2 * h)
