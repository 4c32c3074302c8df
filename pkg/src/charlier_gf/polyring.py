"""Exact multivariate polynomials over the rationals.

Scalars are ``gmpy2.mpq`` values.  A :class:`Polynomial` lives in a
:class:`ParamSet`, an ordered tuple of indeterminate names; monomials are
stored as packed integers so that monomial multiplication is integer
addition and integer comparison is lexicographic order over the declared
names.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Mapping

import gmpy2

ExactRational = type(gmpy2.mpq())

_BITS = 24
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK


class RingMismatchError(ValueError):
    """Raised when two polynomials live over different parameter sets."""


class MissingAssignmentError(KeyError):
    """Raised when evaluation lacks a value for an occurring indeterminate."""


def rational(value) -> ExactRational:
    """Coerce ints, ``Fraction``, ``mpq`` or ``"p/q"`` strings to ``mpq``."""
    if isinstance(value, ExactRational):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return gmpy2.mpq(value)


class ParamSet:
    """An ordered collection of named indeterminates."""

    __slots__ = ("names", "_index", "_shifts")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate indeterminate names in {names!r}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        n = len(names)
        self._shifts = tuple(_BITS * (n - 1 - i) for i in range(n))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(("ParamSet", self.names))

    def __repr__(self) -> str:
        return f"ParamSet({list(self.names)!r})"

    def index(self, name: str) -> int:
        return self._index[name]

    def pack(self, exponents: Iterable[int]) -> int:
        exponents = tuple(exponents)
        if len(exponents) != len(self.names):
            raise ValueError(
                f"exponent vector {exponents} does not match arity {len(self.names)}"
            )
        key = 0
        for e, shift in zip(exponents, self._shifts):
            if e < 0 or e > _MAX_EXP:
                raise ValueError(f"exponent {e} out of range")
            key |= e << shift
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> shift) & _MASK for shift in self._shifts)

    # constructors
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial(self, {0: gmpy2.mpq(1)})

    def const(self, value) -> Polynomial:
        value = rational(value)
        return Polynomial(self, {0: value} if value else {})

    def var(self, name: str) -> Polynomial:
        if name not in self._index:
            raise KeyError(f"{name!r} is not an indeterminate of {self!r}")
        return Polynomial(self, {1 << self._shifts[self._index[name]]: gmpy2.mpq(1)}, 1)

    def vars(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(name) for name in self.names)

    def monomial(self, exponents: Mapping[str, int], coeff=1) -> Polynomial:
        vec = [0] * len(self.names)
        for name, e in exponents.items():
            vec[self._index[name]] = e
        return Polynomial.from_terms(self, {tuple(vec): coeff})

    def random_point(self, rng: random.Random) -> dict[str, ExactRational]:
        """A random nonzero rational for every indeterminate.

        Numerators are drawn from [-20, 20] without 0, denominators from
        [1, 20].
        """
        point = {}
        for name in self.names:
            num = rng.choice([v for v in range(-20, 21) if v])
            den = rng.randint(1, 20)
            point[name] = gmpy2.mpq(num, den)
        return point


CONSTANTS = ParamSet(())


class Polynomial:
    """An immutable polynomial with exact rational coefficients."""

    __slots__ = ("ring", "_terms", "_bound")

    def __init__(self, ring: ParamSet, terms: dict[int, ExactRational], bound: int | None = None):
        # terms must already be normalized: mpq values, no zeros
        self.ring = ring
        self._terms = terms
        if bound is None:
            bound = max((sum(ring.unpack(k)) for k in terms), default=0)
        self._bound = bound

    @classmethod
    def from_terms(cls, ring: ParamSet, terms: Mapping[tuple[int, ...], object]) -> Polynomial:
        packed: dict[int, ExactRational] = {}
        for exps, coeff in terms.items():
            coeff = rational(coeff)
            key = ring.pack(exps)
            total = packed.get(key, 0) + coeff
            if total:
                packed[key] = total
            else:
                packed.pop(key, None)
        return cls(ring, packed)

    # inspection
    def terms(self) -> dict[tuple[int, ...], ExactRational]:
        """Exponent vector to coefficient, in descending lexicographic order."""
        unpack = self.ring.unpack
        return {unpack(k): self._terms[k] for k in sorted(self._terms, reverse=True)}

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], ExactRational]]:
        return iter(self.terms().items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> ExactRational:
        return self._terms.get(0, gmpy2.mpq(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(self.ring.unpack(k)) for k in self._terms)

    def coefficient(self, exponents: Mapping[str, int] | tuple[int, ...]) -> ExactRational:
        if isinstance(exponents, Mapping):
            vec = [0] * len(self.ring)
            for name, e in exponents.items():
                vec[self.ring.index(name)] = e
            exponents = tuple(vec)
        return self._terms.get(self.ring.pack(exponents), gmpy2.mpq(0))

    def variables(self) -> tuple[str, ...]:
        """Names with a nonzero exponent in some term."""
        used = [False] * len(self.ring)
        for key in self._terms:
            for i, e in enumerate(self.ring.unpack(key)):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    # arithmetic
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> Polynomial:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other, self
        else:
            big, small = self, other
        terms = dict(big._terms)
        for key, c in small._terms.items():
            v = terms.get(key)
            if v is None:
                terms[key] = c
            else:
                v = v + c
                if v:
                    terms[key] = v
                else:
                    del terms[key]
        return Polynomial(self.ring, terms, max(self._bound, other._bound))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {k: -c for k, c in self._terms.items()}, self._bound)

    def __sub__(self, other) -> Polynomial:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            try:
                c = rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {k: v * c for k, v in self._terms.items()}, self._bound)
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return self.ring.zero()
        bound = self._bound + other._bound
        if bound > _MAX_EXP:
            raise OverflowError("polynomial degree exceeds packed exponent range")
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return Polynomial(self.ring, {ka + kb: ca * cb for ka, ca in a.items()}, bound)
        out: dict[int, ExactRational] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = ka + kb
                v = get(key)
                out[key] = ca * cb if v is None else v + ca * cb
        return Polynomial(self.ring, {k: v for k, v in out.items() if v}, bound)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Polynomial:
        c = rational(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            other = self.ring.const(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    # evaluation and substitution
    def eval(self, point: Mapping[str, object]) -> ExactRational:
        """Evaluate exactly at a point assigning every occurring indeterminate."""
        values = []
        for name in self.ring.names:
            values.append(point.get(name))
        total = gmpy2.mpq(0)
        for key, c in self._terms.items():
            term = c
            for i, e in enumerate(self.ring.unpack(key)):
                if e:
                    v = values[i]
                    if v is None:
                        raise MissingAssignmentError(self.ring.names[i])
                    term = term * rational(v) ** e
            total += term
        return total

    def subs(self, mapping: Mapping[str, object], target: ParamSet | None = None) -> Polynomial:
        """Substitute polynomials (or scalars) for indeterminates.

        Indeterminates missing from ``mapping`` are carried over to ``target``
        by name; ``target`` defaults to this polynomial's own ring.
        """
        target = self.ring if target is None else target
        images = []
        for name in self.ring.names:
            if name in mapping:
                img = mapping[name]
                if not isinstance(img, Polynomial):
                    img = target.const(img)
                elif img.ring != target:
                    raise RingMismatchError(f"image of {name} is not in {target!r}")
            elif name in target:
                img = target.var(name)
            else:
                img = None
            images.append(img)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        result = target.zero()
        for key, c in self._terms.items():
            term = target.const(c)
            for i, e in enumerate(self.ring.unpack(key)):
                if e:
                    if images[i] is None:
                        raise MissingAssignmentError(self.ring.names[i])
                    term = term * power(i, e)
            result = result + term
        return result

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms().items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exps)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self}, ring={list(self.ring.names)})"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, point: Mapping[str, object]) -> ExactRational:
    return p.eval(point)
