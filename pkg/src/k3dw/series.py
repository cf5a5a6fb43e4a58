"""Coefficients of the Yau-Zaslow series q/Delta(q) = prod (1-q^k)^(-24).

Writing q/Delta(q) = sum_{d>=0} G_d q^d, the integer G_d counts rational
curves in a d-dependent class on a K3 surface.  The first values are

    G_0..G_5 = 1, 24, 324, 3200, 25650, 176256.

Coefficients are computed by the logarithmic-derivative recurrence

    n * G_n = 24 * sum_{j=1}^{n} sigma_1(j) * G_{n-j},

which follows from q d/dq log prod (1-q^k)^(-24) = 24 sum sigma_1(n) q^n.
This is exact integer arithmetic throughout and quadratic in the order, fast
enough for orders in the several thousands.  An independent slow route (the
literal 24-fold product) lives in the check suites and the tests.

A cap guards against runaway orders: requests beyond it raise SeriesCapError.
The default cap is 100000 and can be overridden per table or through the
K3DW_SERIES_CAP environment variable.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from itertools import islice
from operator import mul

from .errors import SeriesCapError, ValidationError

DEFAULT_CAP = 100_000
CAP_ENV_VAR = "K3DW_SERIES_CAP"

# shared sigma_1 sieve, grown monotonically
_sigma: list[int] = [0]
_sigma_lock = threading.Lock()


def _sigma_table(n: int) -> list[int]:
    global _sigma
    with _sigma_lock:
        if n >= len(_sigma):
            size = max(n, 2 * (len(_sigma) - 1)) + 1
            fresh = [0] * size
            for k in range(1, size):
                for m in range(k, size, k):
                    fresh[m] += k
            _sigma = fresh
        return _sigma


class SeriesTable:
    """Memoized coefficients G_0, G_1, ... of the Yau-Zaslow series.

    Extending the table never changes previously computed entries, and
    lookups past the cap fail instead of silently grinding.
    """

    def __init__(self, cap: int | None = None):
        if cap is not None and cap < 0:
            raise ValidationError(f"series cap must be nonnegative, got {cap}")
        self.cap = cap
        self._coeffs: list[int] = [1]
        self._lock = threading.Lock()

    @property
    def order(self) -> int:
        """Largest order computed so far."""
        return len(self._coeffs) - 1

    def effective_cap(self) -> int:
        if self.cap is not None:
            return self.cap
        raw = os.environ.get(CAP_ENV_VAR)
        if raw is None:
            return DEFAULT_CAP
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError(
                f"{CAP_ENV_VAR} must be an integer, got {raw!r}"
            ) from None
        if value < 0:
            raise ValidationError(f"{CAP_ENV_VAR} must be nonnegative, got {value}")
        return value

    def _extend(self, n: int) -> None:
        cap = self.effective_cap()
        if n > cap:
            raise SeriesCapError(
                f"order {n} exceeds the series cap {cap}; raise the cap "
                f"explicitly or via {CAP_ENV_VAR} if this is intentional"
            )
        with self._lock:
            g = self._coeffs
            if n < len(g):
                return
            sigma = _sigma_table(n)
            for m in range(len(g), n + 1):
                acc = sum(map(mul, islice(sigma, 1, m + 1), reversed(g)))
                total = 24 * acc
                coeff, rem = divmod(total, m)
                assert rem == 0, "logarithmic-derivative recurrence must divide evenly"
                g.append(coeff)

    def coefficient(self, d) -> int:
        """G_d for integer d >= 0; zero for negative or non-integer d.

        Accepts ints and Fractions; the non-integer convention makes the
        multiple-cover sums below write naturally without case splits.
        """
        if isinstance(d, Fraction):
            if d.denominator != 1:
                return 0
            d = int(d)
        elif not isinstance(d, int):
            raise ValidationError(
                f"series index must be an int or Fraction, got {type(d).__name__}"
            )
        if d < 0:
            return 0
        if d >= len(self._coeffs):
            self._extend(d)
        return self._coeffs[d]

    def coefficients(self, n: int) -> list[int]:
        """The list [G_0, ..., G_n]."""
        if n < 0:
            raise ValidationError(f"series order must be nonnegative, got {n}")
        if n >= len(self._coeffs):
            self._extend(n)
        return self._coeffs[: n + 1]


_default_table = SeriesTable()


def default_table() -> SeriesTable:
    """The process-wide shared coefficient table."""
    return _default_table


def yz_coefficient(d, *, table: SeriesTable | None = None) -> int:
    """G_d from the shared table (or a caller-supplied one)."""
    return (table or _default_table).coefficient(d)


def yz_coefficients(n: int, *, table: SeriesTable | None = None) -> list[int]:
    """[G_0, ..., G_n] from the shared table (or a caller-supplied one)."""
    return (table or _default_table).coefficients(n)
