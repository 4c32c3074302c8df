"""Generating-function identities for Charlier polynomials and their checks.

Every identity has an LHS builder that goes through ``charlier_C`` (or the
brute-force derangement polynomials) and an RHS builder that goes through
``series_exp``, ``neg_binomial`` and ``rising_factorial``.  The two paths
share nothing above the series algebra, so agreement is a real check.

Builders take ``values``, a mapping from parameter name to a Polynomial or
a rational.  ``None`` means fully symbolic.  Passing rationals for every
name gives a numeric build, which is how random-point mode evaluates both
sides.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from math import factorial

from .charlier import charlier_C, derangement_poly, rising_factorial
from .configs import config_weight, enumerate_configs, multilinear_ring, sum_H_weights
from .polyring import CONSTANTS, ParamSet, Polynomial
from .series import TruncatedSeries, neg_binomial, series_exp

LHS = "LHS"
RHS = "RHS"


class UnknownIdentityError(KeyError):
    pass


# -- helpers -----------------------------------------------------------------


def _bind(names: Sequence[str], values: Mapping[str, object] | None):
    """Resolve parameter names to Polynomials in one common ring."""
    if values is None:
        ring = ParamSet(names)
        return ring, {n: ring.var(n) for n in names}
    missing = [n for n in names if n not in values]
    if missing:
        raise KeyError(f"no value for parameters {missing}")
    rings = {v.ring for v in values.values() if isinstance(v, Polynomial)}
    if len(rings) > 1:
        raise ValueError("parameter values live in different rings")
    ring = rings.pop() if rings else CONSTANTS
    bound = {}
    for n in names:
        v = values[n]
        bound[n] = v if isinstance(v, Polynomial) else ring.const(v)
    return ring, bound


class _Frame:
    """Series constructors for one (variables, order, ring) setting."""

    def __init__(self, variables: Sequence[str], order: int, ring: ParamSet):
        self.variables = tuple(variables)
        self.order = order
        self.ring = ring

    def const(self, c, order: int | None = None) -> TruncatedSeries:
        if not isinstance(c, Polynomial):
            c = self.ring.const(c)
        return TruncatedSeries.const(self.variables, self.order if order is None else order, c)

    def var(self, name: str, coeff=None, order: int | None = None) -> TruncatedSeries:
        if coeff is not None and not isinstance(coeff, Polynomial):
            coeff = self.ring.const(coeff)
        return TruncatedSeries.var(
            name, self.variables, self.order if order is None else order, self.ring, coeff
        )

    def linear(self, terms: Mapping[str, object], order: int | None = None) -> TruncatedSeries:
        total = self.const(0, order)
        for name, coeff in terms.items():
            total = total + self.var(name, coeff, order)
        return total

    def monomial(self, exps: Sequence[int], coeff) -> TruncatedSeries:
        if not isinstance(coeff, Polynomial):
            coeff = self.ring.const(coeff)
        return TruncatedSeries(self.variables, self.order, self.ring, {tuple(exps): coeff})

    def zero(self) -> TruncatedSeries:
        return self.const(0)

    def shifted(self, f: TruncatedSeries, exps: Sequence[int], coeff) -> TruncatedSeries:
        """coeff * monomial(exps) * f, where f is known to order - sum(exps)."""
        if not isinstance(coeff, Polynomial):
            coeff = self.ring.const(coeff)
        return TruncatedSeries(
            self.variables, self.order, self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in f.items()},
        )


def _check_side(side: str) -> None:
    if side not in (LHS, RHS):
        raise ValueError(f"side must be {LHS!r} or {RHS!r}, got {side!r}")


def _compositions(total_max: int, parts: int):
    """Non-negative integer vectors of length ``parts`` with sum <= total_max."""
    for vec in itertools.product(range(total_max + 1), repeat=parts):
        if sum(vec) <= total_max:
            yield vec


def _inv_factorials(*ns: int) -> int:
    den = 1
    for n in ns:
        den *= factorial(n)
    return den


# -- the multilinear identity -------------------------------------------------


def multilinear_names(k: int) -> tuple[str, ...]:
    return multilinear_ring(k).names


def build_multilinear_side(
    side: str, k: int, order: int, values: Mapping[str, object] | None = None,
    drop_prefactor: bool = False,
) -> TruncatedSeries:
    """Either side of the multilinear generating function, as a series in z.

    Each x_ij is scaled by z, so z tracks the total sum of the n_ij.
    """
    if k < 2:
        raise ValueError("the multilinear identity needs k >= 2")
    if order < 0:
        raise ValueError("order must be non-negative")
    ring, p = _bind(multilinear_names(k), values)
    F = _Frame(("z",), order, ring)
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    a = {i: p[f"a{i}"] for i in range(1, k + 1)}
    r = {i: p[f"r{i}"] for i in range(1, k + 1)}
    x = {(i, j): p[f"x{i}{j}"] for i, j in pairs}
    x.update({(j, i): v for (i, j), v in list(x.items())})

    def degrees(mat):
        n = {i: 0 for i in range(1, k + 1)}
        for (i, j), e in zip(pairs, mat):
            n[i] += e
            n[j] += e
        return n

    def x_part(mat):
        mono = ring.one()
        for pair, e in zip(pairs, mat):
            mono = mono * x[pair] ** e
        return mono / _inv_factorials(*mat)

    total = F.zero()
    _check_side(side)
    if side == LHS:
        cache = {}
        for mat in _compositions(order, len(pairs)):
            coeff = x_part(mat)
            for i, ni in degrees(mat).items():
                if (i, ni) not in cache:
                    cache[(i, ni)] = charlier_C(ni, a[i], r[i])
                coeff = coeff * cache[(i, ni)]
            total = total + F.monomial((sum(mat),), coeff)
        return total
    weight = {i: sum((r[j] * x[(i, j)] for j in range(1, k + 1) if j != i), ring.zero())
              for i in range(1, k + 1)}
    nb_cache = {}

    def inv_power(i, e, trunc):
        # (1 - z * weight_i)^(-e) at truncation order trunc
        key = (i, e, trunc)
        if key not in nb_cache:
            nb_cache[key] = neg_binomial(e, F.var("z", weight[i], order=trunc))
        return nb_cache[key]

    for mat in _compositions(order, len(pairs)):
        d = sum(mat)
        n = degrees(mat)
        coeff = x_part(mat)
        for i in range(1, k + 1):
            coeff = coeff * rising_factorial(a[i], n[i])
        if coeff.is_zero():
            continue
        factor = F.const(1, order - d)
        for i in range(1, k + 1):
            if n[i]:
                factor = factor * inv_power(i, n[i], order - d)
        total = total + F.shifted(factor, (d,), coeff)
    for i in range(1, k + 1):
        total = total * neg_binomial(a[i], F.var("z", weight[i]))
    if not drop_prefactor:
        for i, j in pairs:
            total = total * series_exp(F.var("z", r[i] * r[j] * x[(i, j)]))
    return total


def multilinear_as_multivariate(f: TruncatedSeries, k: int, variables: Sequence[str]) -> TruncatedSeries:
    """Spread a multilinear z-series over one series variable per x_ij.

    The z^d coefficient is homogeneous of degree d in the x_ij; each monomial
    prod x_ij^{n_ij} moves to the series exponent (n_ij) with the x_ij set
    to 1.  The parameters a_i, r_i keep their names.
    """
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    if len(variables) != len(pairs):
        raise ValueError("one series variable per pair i < j is needed")
    x_names = [f"x{i}{j}" for i, j in pairs]
    base_names = [n for n in f.ring.names if n not in x_names]
    base = ParamSet(base_names)
    x_idx = [f.ring.index(n) for n in x_names]
    b_idx = [f.ring.index(n) for n in base_names]
    coeffs: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
    for (d,), c in f.items():
        for exps, q in c.terms().items():
            xe = tuple(exps[i] for i in x_idx)
            if sum(xe) != d:
                raise ValueError(f"z^{d} coefficient is not homogeneous in the x_ij")
            coeffs.setdefault(xe, {})[tuple(exps[i] for i in b_idx)] = q
    return TruncatedSeries(
        variables, f.order, base,
        {xe: Polynomial.from_terms(base, terms) for xe, terms in coeffs.items()},
    )


# -- specializations ------------------------------------------------------------


def build_bilinear_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """sum C_n(a,r) C_n(b,s) x^n/n!  =  e^{rsx} sum (a)_n (b)_n x^n / [n! (1-sx)^{n+a} (1-rx)^{n+b}]."""
    ring, p = _bind(("a", "b", "r", "s"), values)
    a, b, r, s = p["a"], p["b"], p["r"], p["s"]
    F = _Frame(("x",), order, ring)
    total = F.zero()
    _check_side(side)
    if side == LHS:
        for n in range(order + 1):
            total = total + F.monomial((n,), charlier_C(n, a, r) * charlier_C(n, b, s) / factorial(n))
        return total
    for n in range(order + 1):
        coeff = rising_factorial(a, n) * rising_factorial(b, n) / factorial(n)
        if coeff.is_zero():
            continue
        trunc = order - n
        factor = (neg_binomial(a + n, F.var("x", s, order=trunc))
                  * neg_binomial(b + n, F.var("x", r, order=trunc)))
        total = total + F.shifted(factor, (n,), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.var("x", r * s))
    return total


def build_egf_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """sum C_n(a,r) x^n/n!  =  e^{rx} (1-x)^{-a}."""
    ring, p = _bind(("a", "r"), values)
    a, r = p["a"], p["r"]
    F = _Frame(("x",), order, ring)
    _check_side(side)
    if side == LHS:
        total = F.zero()
        for n in range(order + 1):
            total = total + F.monomial((n,), charlier_C(n, a, r) / factorial(n))
        return total
    total = neg_binomial(a, F.var("x"))
    if not drop_prefactor:
        total = total * series_exp(F.var("x", r))
    return total


def _sum_three_way(F, order, lhs_coeff):
    total = F.zero()
    for l, m, n in _compositions(order, 3):
        total = total + F.monomial((l, m, n), lhs_coeff(l, m, n) / _inv_factorials(l, m, n))
    return total


def build_trilinear_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """The three-colour case in series variables x, y, z (exponents l, m, n)."""
    ring, p = _bind(("a", "b", "c", "r", "s", "t"), values)
    a, b, c, r, s, t = (p[n] for n in ("a", "b", "c", "r", "s", "t"))
    F = _Frame(("x", "y", "z"), order, ring)
    _check_side(side)
    if side == LHS:
        cache = {}

        def C(n, u, v):
            if (n, id(u)) not in cache:
                cache[(n, id(u))] = charlier_C(n, u, v)
            return cache[(n, id(u))]

        return _sum_three_way(
            F, order, lambda l, m, n: C(l + m, a, r) * C(l + n, b, s) * C(m + n, c, t)
        )
    total = F.zero()
    for l, m, n in _compositions(order, 3):
        coeff = (rising_factorial(a, l + m) * rising_factorial(b, l + n)
                 * rising_factorial(c, m + n) / _inv_factorials(l, m, n))
        if coeff.is_zero():
            continue
        trunc = order - l - m - n
        factor = (neg_binomial(a + (l + m), F.linear({"x": s, "y": t}, trunc))
                  * neg_binomial(b + (l + n), F.linear({"x": r, "z": t}, trunc))
                  * neg_binomial(c + (m + n), F.linear({"y": r, "z": s}, trunc)))
        total = total + F.shifted(factor, (l, m, n), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.linear({"x": r * s, "y": r * t, "z": s * t}))
    return total


def build_carlitz_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """The trilinear identity at x = 0, in series variables y, z."""
    ring, p = _bind(("a", "b", "c", "r", "s", "t"), values)
    a, b, c, r, s, t = (p[n] for n in ("a", "b", "c", "r", "s", "t"))
    F = _Frame(("y", "z"), order, ring)
    total = F.zero()
    _check_side(side)
    if side == LHS:
        for m, n in _compositions(order, 2):
            coeff = charlier_C(m, a, r) * charlier_C(n, b, s) * charlier_C(m + n, c, t)
            total = total + F.monomial((m, n), coeff / _inv_factorials(m, n))
        return total
    for m, n in _compositions(order, 2):
        coeff = (rising_factorial(a, m) * rising_factorial(b, n)
                 * rising_factorial(c, m + n) / _inv_factorials(m, n))
        if coeff.is_zero():
            continue
        trunc = order - m - n
        factor = (neg_binomial(a + m, F.var("y", t, order=trunc))
                  * neg_binomial(b + n, F.var("z", t, order=trunc))
                  * neg_binomial(c + (m + n), F.linear({"y": r, "z": s}, trunc)))
        total = total + F.shifted(factor, (m, n), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.linear({"y": r * t, "z": s * t}))
    return total


def build_bilinear_general_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """The trilinear identity at c = 0, t = 1: only the l-sum survives on the right."""
    ring, p = _bind(("a", "b", "r", "s"), values)
    a, b, r, s = (p[n] for n in ("a", "b", "r", "s"))
    F = _Frame(("x", "y", "z"), order, ring)
    _check_side(side)
    if side == LHS:
        return _sum_three_way(
            F, order, lambda l, m, n: charlier_C(l + m, a, r) * charlier_C(l + n, b, s)
        )
    total = F.zero()
    for l in range(order + 1):
        coeff = rising_factorial(a, l) * rising_factorial(b, l) / factorial(l)
        if coeff.is_zero():
            continue
        trunc = order - l
        factor = (neg_binomial(a + l, F.linear({"x": s, "y": 1}, trunc))
                  * neg_binomial(b + l, F.linear({"x": r, "z": 1}, trunc)))
        total = total + F.shifted(factor, (l, 0, 0), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.linear({"x": r * s, "y": r, "z": s}))
    return total


def _derangement(n: int, value: Polynomial) -> Polynomial:
    return derangement_poly(n).subs({"alpha": value}, value.ring)


def build_derangement_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """sum D_n(alpha) D_n(beta) x^n/n! against its closed form."""
    ring, p = _bind(("alpha", "beta"), values)
    al, be = p["alpha"], p["beta"]
    F = _Frame(("x",), order, ring)
    total = F.zero()
    _check_side(side)
    if side == LHS:
        for n in range(order + 1):
            total = total + F.monomial((n,), _derangement(n, al) * _derangement(n, be) / factorial(n))
        return total
    for n in range(order + 1):
        coeff = rising_factorial(al, n) * rising_factorial(be, n) / factorial(n)
        if coeff.is_zero():
            continue
        trunc = order - n
        factor = (neg_binomial(al + n, F.var("x", -be, order=trunc))
                  * neg_binomial(be + n, F.var("x", -al, order=trunc)))
        total = total + F.shifted(factor, (n,), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.var("x", al * be))
    return total


def build_derangement_trilinear_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """sum D_m(alpha) D_n(beta) D_{m+n}(gamma) y^m z^n/(m! n!) against its closed form."""
    ring, p = _bind(("alpha", "beta", "gamma"), values)
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    F = _Frame(("y", "z"), order, ring)
    total = F.zero()
    _check_side(side)
    if side == LHS:
        for m, n in _compositions(order, 2):
            coeff = _derangement(m, al) * _derangement(n, be) * _derangement(m + n, ga)
            total = total + F.monomial((m, n), coeff / _inv_factorials(m, n))
        return total
    for m, n in _compositions(order, 2):
        coeff = (rising_factorial(al, m) * rising_factorial(be, n)
                 * rising_factorial(ga, m + n) / _inv_factorials(m, n))
        if coeff.is_zero():
            continue
        trunc = order - m - n
        factor = (neg_binomial(al + m, F.var("y", -ga, order=trunc))
                  * neg_binomial(be + n, F.var("z", -ga, order=trunc))
                  * neg_binomial(ga + (m + n), F.linear({"y": -al, "z": -be}, trunc)))
        total = total + F.shifted(factor, (m, n), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.linear({"y": al * ga, "z": be * ga}))
    return total


def build_derangement_bilinear_general_side(side: str, order: int, values=None, drop_prefactor: bool = False) -> TruncatedSeries:
    """sum D_{l+m}(alpha) D_{l+n}(beta) x^l y^m z^n/(l! m! n!) against its closed form."""
    ring, p = _bind(("alpha", "beta"), values)
    al, be = p["alpha"], p["beta"]
    F = _Frame(("x", "y", "z"), order, ring)
    _check_side(side)
    if side == LHS:
        return _sum_three_way(
            F, order, lambda l, m, n: _derangement(l + m, al) * _derangement(l + n, be)
        )
    total = F.zero()
    for l in range(order + 1):
        coeff = rising_factorial(al, l) * rising_factorial(be, l) / factorial(l)
        if coeff.is_zero():
            continue
        trunc = order - l
        factor = (neg_binomial(al + l, F.linear({"x": -be, "y": 1}, trunc))
                  * neg_binomial(be + l, F.linear({"x": -al, "z": 1}, trunc)))
        total = total + F.shifted(factor, (l, 0, 0), coeff)
    if not drop_prefactor:
        total = total * series_exp(F.linear({"x": al * be, "y": -al, "z": -be}))
    return total


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    params: Callable[[int], tuple[str, ...]]
    variables: tuple[str, ...]
    build: Callable[..., TruncatedSeries]
    reference: str
    uses_k: bool = False

    def side(self, side: str, order: int, k: int = 2, values=None, drop_prefactor: bool = False):
        if self.uses_k:
            return self.build(side, k, order, values, drop_prefactor)
        return self.build(side, order, values, drop_prefactor)


def _fixed(*names):
    return lambda k: names


REGISTRY: dict[str, IdentitySpec] = {
    spec.id: spec
    for spec in [
        IdentitySpec("multilinear", multilinear_names, ("z",), build_multilinear_side,
                     "multilinear generating function, x_ij scaled by z", uses_k=True),
        IdentitySpec("bilinear", _fixed("a", "b", "r", "s"), ("x",), build_bilinear_side,
                     "bilinear generating function (k = 2)"),
        IdentitySpec("trilinear", _fixed("a", "b", "c", "r", "s", "t"), ("x", "y", "z"),
                     build_trilinear_side, "trilinear generating function (k = 3)"),
        IdentitySpec("carlitz", _fixed("a", "b", "c", "r", "s", "t"), ("y", "z"),
                     build_carlitz_side, "Carlitz-type analogue: trilinear at x = 0"),
        IdentitySpec("egf", _fixed("a", "r"), ("x",), build_egf_side,
                     "exponential generating function of C_n(a, r)"),
        IdentitySpec("bilinear-general", _fixed("a", "b", "r", "s"), ("x", "y", "z"),
                     build_bilinear_general_side, "trilinear at c = 0, t = 1"),
        IdentitySpec("derangement-bilinear", _fixed("alpha", "beta"), ("x",),
                     build_derangement_side, "bilinear identity for D_n(alpha)"),
        IdentitySpec("derangement-trilinear", _fixed("alpha", "beta", "gamma"), ("y", "z"),
                     build_derangement_trilinear_side, "Carlitz-type identity for D_n(alpha)"),
        IdentitySpec("derangement-bilinear-general", _fixed("alpha", "beta"), ("x", "y", "z"),
                     build_derangement_bilinear_general_side,
                     "generalized bilinear identity for D_n(alpha)"),
    ]
}

ORACLE_IDS = ("oracle-config", "oracle-H")
IDENTITY_IDS = tuple(REGISTRY) + ORACLE_IDS


# -- verification -------------------------------------------------------------


@dataclass
class VerificationReport:
    identity: str
    mode: str
    order: int
    verified: bool
    degree_flags: dict[int, bool] = field(default_factory=dict)
    mismatches: list[dict] = field(default_factory=list)
    seed: int | None = None
    points: int = 0
    point_values: list[dict[str, str]] = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def first_mismatch(self) -> dict | None:
        return self.mismatches[0] if self.mismatches else None

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "identity": self.identity,
            "mode": self.mode,
            "order": self.order,
            "verified": self.verified,
            "mismatches": self.mismatches,
            "seed": self.seed,
            "points": self.points,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self, timing: bool = True) -> str:
        status = "VERIFIED" if self.verified else "FAILED"
        lines = [f"{self.identity}: {status} (mode={self.mode}, order={self.order})"]
        if self.mode == "random":
            lines.append(f"  seed={self.seed} points={self.points}")
        flags = " ".join(f"{d}:{'ok' if ok else 'FAIL'}" for d, ok in sorted(self.degree_flags.items()))
        lines.append(f"  degrees {flags}")
        for mm in self.mismatches[:5]:
            where = f" at point {mm['point']}" if mm.get("point") is not None else ""
            lines.append(f"  mismatch at {mm['degree']}{where}: lhs={mm['lhs']} rhs={mm['rhs']}")
        if timing and self.elapsed_ms is not None:
            lines.append(f"  elapsed {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


MAX_REPORTED_MISMATCHES = 20


def compare_series(lhs: TruncatedSeries, rhs: TruncatedSeries, point: int | None = None):
    """Per-total-degree equality flags and mismatching coefficients, lowest degree first."""
    if lhs.variables != rhs.variables or lhs.ring != rhs.ring:
        raise ValueError("series are not comparable")
    order = min(lhs.order, rhs.order)
    flags = {d: True for d in range(order + 1)}
    mismatches = []
    keys = sorted(
        {e for e in lhs.support() | rhs.support() if sum(e) <= order}, key=lambda e: (sum(e), e)
    )
    for e in keys:
        cl, cr = lhs.coefficient(e), rhs.coefficient(e)
        if cl != cr:
            flags[sum(e)] = False
            mismatches.append({
                "degree": list(e), "total_degree": sum(e),
                "lhs": str(cl), "rhs": str(cr), "point": point,
            })
    return flags, mismatches


def _merge(report: VerificationReport, flags, mismatches):
    for d, ok in flags.items():
        report.degree_flags[d] = report.degree_flags.get(d, True) and ok
    room = MAX_REPORTED_MISMATCHES - len(report.mismatches)
    report.mismatches.extend(mismatches[:max(room, 0)])


def verify(
    identity: str, order: int, mode: str = "symbolic", points: int = 20, seed: int = 0,
    k: int = 2, drop_prefactor: bool = False,
) -> VerificationReport:
    """Compare LHS and RHS coefficients of a registered identity up to ``order``.

    ``symbolic`` compares exact Polynomial coefficients; ``random`` builds
    both sides at ``points`` seeded random rational parameter values.  The
    oracle ids run :func:`oracle_compare` with n = order.
    """
    start = time.perf_counter()
    if identity in ORACLE_IDS:
        kind = "config" if identity == "oracle-config" else "H"
        return oracle_compare(kind, k, order)
    if identity not in REGISTRY:
        raise UnknownIdentityError(identity)
    if order < 0:
        raise ValueError("order must be non-negative")
    spec = REGISTRY[identity]
    report = VerificationReport(identity, mode, order, False)
    if mode == "symbolic":
        lhs = spec.side(LHS, order, k)
        rhs = spec.side(RHS, order, k, drop_prefactor=drop_prefactor)
        _merge(report, *compare_series(lhs, rhs))
    elif mode == "random":
        report.seed, report.points = seed, points
        rng = random.Random(seed)
        ring = ParamSet(spec.params(k))
        for idx in range(points):
            point = ring.random_point(rng)
            report.point_values.append({n: str(v) for n, v in point.items()})
            lhs = spec.side(LHS, order, k, values=point)
            rhs = spec.side(RHS, order, k, values=point, drop_prefactor=drop_prefactor)
            _merge(report, *compare_series(lhs, rhs, point=idx))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report.verified = all(report.degree_flags.values()) and not report.mismatches
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def oracle_compare(kind: str, k: int = 2, n: int = 0, force: bool = False) -> VerificationReport:
    """Brute-force enumeration against the closed form.

    ``config``: total weight of all configurations on [n] versus C_n(a, r).
    ``H``: total tuple weight over H(k, n) versus n! [z^n] of the multilinear LHS.
    """
    start = time.perf_counter()
    if kind == "config":
        ring = ParamSet(("a", "r"))
        a, r = ring.vars()
        brute = ring.zero()
        for c in enumerate_configs(range(1, n + 1)):
            brute = brute + config_weight(c, a, r)
        closed = charlier_C(n, a, r)
        ident = "oracle-config"
    elif kind == "H":
        brute = sum_H_weights(k, n, force=force)
        closed = build_multilinear_side(LHS, k, n).coefficient((n,)) * factorial(n)
        ident = "oracle-H"
    else:
        raise ValueError(f"unknown oracle kind {kind!r}")
    ok = brute == closed
    report = VerificationReport(ident, "oracle", n, ok, degree_flags={n: ok})
    if not ok:
        report.mismatches.append({
            "degree": [n], "total_degree": n, "lhs": str(brute), "rhs": str(closed), "point": None,
        })
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
