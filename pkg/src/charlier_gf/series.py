"""Truncated multivariate power series with polynomial coefficients.

Truncation is by total degree over the series variables: a series of order
``N`` keeps every term whose exponents sum to at most ``N``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from math import factorial

from .charlier import rising_factorial
from .polyring import ParamSet, Polynomial, RingMismatchError


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """Immutable truncated series; ``coeffs`` maps exponent tuples to Polynomials."""

    __slots__ = ("variables", "order", "ring", "_coeffs")

    def __init__(
        self,
        variables: Iterable[str],
        order: int,
        ring: ParamSet,
        coeffs: Mapping[tuple[int, ...], Polynomial] | None = None,
    ):
        self.variables = tuple(variables)
        if order < 0:
            raise SeriesError("truncation order must be non-negative")
        self.order = order
        self.ring = ring
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables) or min(exps, default=0) < 0:
                raise SeriesError(f"bad exponent vector {exps}")
            if sum(exps) > order:
                continue
            if not isinstance(c, Polynomial):
                c = ring.const(c)
            elif c.ring != ring:
                raise RingMismatchError(f"coefficient ring {c.ring!r} is not {ring!r}")
            if not c.is_zero():
                clean[exps] = c
        self._coeffs = clean

    # constructors
    @classmethod
    def const(cls, variables, order: int, value) -> TruncatedSeries:
        if not isinstance(value, Polynomial):
            raise TypeError("const needs a Polynomial; use ring.const for scalars")
        variables = tuple(variables)
        return cls(variables, order, value.ring, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name: str, variables, order: int, ring: ParamSet, coeff=None) -> TruncatedSeries:
        """The series ``coeff * name`` (coefficient defaults to 1)."""
        variables = tuple(variables)
        exps = tuple(int(v == name) for v in variables)
        if sum(exps) != 1:
            raise SeriesError(f"{name!r} is not one of {variables}")
        return cls(variables, order, ring, {exps: ring.one() if coeff is None else coeff})

    # inspection
    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def support(self) -> set[tuple[int, ...]]:
        return set(self._coeffs)

    def coefficient(self, degree) -> Polynomial:
        if isinstance(degree, int):
            degree = (degree,)
        elif isinstance(degree, Mapping):
            degree = tuple(degree.get(v, 0) for v in self.variables)
        degree = tuple(degree)
        if len(degree) != len(self.variables):
            raise SeriesError(f"degree {degree} does not match variables {self.variables}")
        if sum(degree) > self.order:
            raise SeriesError(f"degree {degree} exceeds truncation order {self.order}")
        return self._coeffs.get(degree, self.ring.zero())

    def constant_term(self) -> Polynomial:
        return self._coeffs.get((0,) * len(self.variables), self.ring.zero())

    def _check(self, other: TruncatedSeries) -> None:
        if self.variables != other.variables:
            raise SeriesError(f"series variables differ: {self.variables} vs {other.variables}")
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return TruncatedSeries.const(self.variables, self.order, other)

    # arithmetic
    def __add__(self, other) -> TruncatedSeries:
        other = self._lift(other)
        order = min(self.order, other.order)
        out = dict(self._coeffs)
        for exps, c in other._coeffs.items():
            out[exps] = out[exps] + c if exps in out else c
        return TruncatedSeries(self.variables, order, self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.variables, self.order, self.ring, {e: -c for e, c in self._coeffs.items()}
        )

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            if not isinstance(other, Polynomial):
                other = self.ring.const(other)
            elif other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return TruncatedSeries(
                self.variables, self.order, self.ring,
                {e: c * other for e, c in self._coeffs.items()},
            )
        self._check(other)
        order = min(self.order, other.order)
        left = [(sum(e), e, c) for e, c in self._coeffs.items()]
        right = [(sum(e), e, c) for e, c in other._coeffs.items()]
        out: dict[tuple[int, ...], Polynomial] = {}
        for da, ea, ca in left:
            room = order - da
            if room < 0:
                continue
            for db, eb, cb in right:
                if db > room:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                out[key] = out[key] + prod if key in out else prod
        return TruncatedSeries(self.variables, order, self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncatedSeries:
        if n < 0:
            raise SeriesError("negative powers are not supported; use neg_binomial")
        result = self._lift(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.order == other.order
            and self.ring == other.ring
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    # transformations
    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.variables, min(order, self.order), self.ring, self._coeffs)

    def map_coefficients(self, fn: Callable[[Polynomial], Polynomial], ring: ParamSet) -> TruncatedSeries:
        return TruncatedSeries(
            self.variables, self.order, ring, {e: fn(c) for e, c in self._coeffs.items()}
        )

    def subs_params(self, mapping: Mapping[str, object], target: ParamSet) -> TruncatedSeries:
        """Substitute into every coefficient (see :meth:`Polynomial.subs`)."""
        return self.map_coefficients(lambda c: c.subs(mapping, target), target)

    def set_zero(self, name: str) -> TruncatedSeries:
        """Specialize series variable ``name`` to 0 and drop it."""
        i = self.variables.index(name)
        keep = self.variables[:i] + self.variables[i + 1:]
        return TruncatedSeries(
            keep, self.order, self.ring,
            {e[:i] + e[i + 1:]: c for e, c in self._coeffs.items() if e[i] == 0},
        )

    def rename(self, variables: Iterable[str]) -> TruncatedSeries:
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise SeriesError("rename needs the same number of variables")
        return TruncatedSeries(variables, self.order, self.ring, self._coeffs)

    def __str__(self) -> str:
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(deg {self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, variables={self.variables})"


def _powers(u: TruncatedSeries) -> list[TruncatedSeries]:
    if not u.constant_term().is_zero():
        raise SeriesError("argument must have zero constant term")
    powers = [u._lift(1)]
    for _ in range(u.order):
        powers.append(powers[-1] * u)
    return powers


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) = sum_m f^m / m! for f without constant term."""
    result = f._lift(0)
    for m, fm in enumerate(_powers(f)):
        result = result + _scale(fm, 1, factorial(m))
    return result


def _scale(f: TruncatedSeries, num, den: int) -> TruncatedSeries:
    if isinstance(num, Polynomial):
        return f * (num / den)
    return f * (f.ring.const(num) / den)


def neg_binomial(exponent, u: TruncatedSeries) -> TruncatedSeries:
    """(1 - u)^(-exponent) = sum_m (exponent)_m u^m / m!.

    ``exponent`` is a Polynomial in the series' parameter ring or a number.
    """
    if not isinstance(exponent, Polynomial):
        exponent = u.ring.const(exponent)
    elif exponent.ring != u.ring:
        raise RingMismatchError(f"exponent ring {exponent.ring!r} is not {u.ring!r}")
    result = u._lift(0)
    for m, um in enumerate(_powers(u)):
        coeff = rising_factorial(exponent, m)
        if coeff.is_zero():
            break
        result = result + _scale(um, coeff, factorial(m))
    return result


def coefficient(f: TruncatedSeries, degree) -> Polynomial:
    return f.coefficient(degree)
