"""Exact Fibonacci and Lucas numbers plus the classical identities tying them together.

Everything here is pure integer arithmetic on Python ints (arbitrary precision,
no floating point anywhere).  Indices are nonnegative; negative-index
extensions are deliberately out of scope.  Practical soft ceiling is around
n = 10**6, above which single values still compute but take noticeable time
and memory.
"""

from __future__ import annotations

__all__ = [
    "fib",
    "fib_pair",
    "lucas",
    "lucas_pair",
    "check_identity",
    "IDENTITIES",
]

#: Selectors accepted by :func:`check_identity`.
IDENTITIES = ("i", "ii", "iii", "iv", "v")


def _check_index(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"sequence index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"sequence index must be >= 0, got {n}")
    return n


def fib_pair(n: int) -> tuple[int, int]:
    """Return (F(n), F(n+1)) by fast doubling.

    Uses F(2k) = F(k)*(2*F(k+1) - F(k)) and F(2k+1) = F(k)^2 + F(k+1)^2,
    consuming the bits of n from the top; O(log n) big-int multiplications.
    """
    _check_index(n)
    a, b = 0, 1  # F(0), F(1)
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1."""
    return fib_pair(n)[0]


def lucas_pair(n: int) -> tuple[int, int]:
    """Return (L(n), L(n+1)), derived from the same doubling pass as fib_pair."""
    f, f1 = fib_pair(n)
    # L(n) = 2F(n+1) - F(n), L(n+1) = F(n) + F(n+2) = F(n+1) + (F(n) + F(n+1))
    return 2 * f1 - f, f + f1 + f1


def lucas(n: int) -> int:
    """L(n) with L(0) = 2, L(1) = 1."""
    return lucas_pair(n)[0]


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def check_identity(which: str, m: int, n: int) -> bool:
    """Evaluate one of five exact Fibonacci/Lucas identities and report equality.

    Requires n >= m.  The selectors are:

      i    5*F(n)^2 + 4*(-1)^n == L(n)^2              (m is ignored)
      ii   L(m)*L(n) + 5*F(m)*F(n) == 2*L(m+n)
      iii  F(n)*L(m) == F(n+m) + (-1)^m * F(n-m)
      iv   L(n)*F(m) == F(n+m) - (-1)^m * F(n-m)
      v    5*F(m)*F(n) == L(m+n) - (-1)^m * L(n-m)

    Both sides are evaluated exactly in signed arithmetic; the return value is
    their equality, making this usable as a self-test primitive.
    """
    _check_index(m)
    _check_index(n)
    if n < m:
        raise ValueError(f"identity requires n >= m, got m={m}, n={n}")
    if which == "i":
        return 5 * fib(n) ** 2 + 4 * _sign(n) == lucas(n) ** 2
    if which == "ii":
        return lucas(m) * lucas(n) + 5 * fib(m) * fib(n) == 2 * lucas(m + n)
    if which == "iii":
        return fib(n) * lucas(m) == fib(n + m) + _sign(m) * fib(n - m)
    if which == "iv":
        return lucas(n) * fib(m) == fib(n + m) - _sign(m) * fib(n - m)
    if which == "v":
        return 5 * fib(m) * fib(n) == lucas(m + n) - _sign(m) * lucas(n - m)
    raise ValueError(f"unknown identity selector {which!r}; expected one of {IDENTITIES}")
