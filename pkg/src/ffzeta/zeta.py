r"""Dynamical zeta functions: classification, closed forms, power series.

The zeta function of the system is exp(sum_k N_k z^k / k).  Whether it is
an algebraic function is decided by divisibility: every unit order must be
divisible by some root-of-unity order (vacuously true when there are no
unit roots).  In the algebraic case N_k = q^{kE} exactly when no
root-of-unity order divides k and is 0 otherwise, and inclusion-exclusion
over the multiset of root-of-unity orders turns the exponential sum into a
finite product of factors (1 - (q^E z)^L)^{+-1/L} collected here with
exact rational exponents.  In the transcendental case a certificate
records the smallest offending unit order.

Series expansions come from two independent directions: the exponential
recurrence n c_n = sum N_k c_{n-k} driven by any N_k source, and the
generalized binomial expansion of the closed-form product.  The inverse
recurrence recovers the N_k from a series, closing the loop for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import errors
from .spectral import SpectralData

SUBSET_CAP = 16


@dataclass(frozen=True)
class SeriesTrunc:
    """Truncated power series around 0 with exact rational coefficients."""

    order: int
    coeffs: tuple  # Fractions, length order + 1

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise errors.InternalInvariantError("series length mismatch")


@dataclass(frozen=True)
class ZetaClosedForm:
    """Product of (1 - (q^E z)^L)^gamma over the factor list.

    factors is a tuple of (L, gamma) with integer L >= 1 and nonzero
    Fraction gamma, sorted by L; equal L are merged and zero exponents
    dropped, so equal products compare equal structurally.
    """

    q: int
    E: int
    factors: tuple

    def display(self) -> str:
        if not self.factors:
            return "1"

        def one_factor(L, gamma):
            coef = self.q ** (self.E * L)
            inner = "1-z" if coef == 1 else f"1-{coef}z"
            if L > 1:
                inner += f"^{L}"
            s = f"({inner})"
            mag = abs(gamma)
            if mag != 1:
                s += f"^{{{mag}}}"
            return s

        num = "".join(one_factor(L, g) for L, g in self.factors if g > 0)
        den_parts = [one_factor(L, g) for L, g in self.factors if g < 0]
        den = "".join(den_parts)
        if len(den_parts) > 1:
            den = f"({den})"
        if not den:
            return num
        return f"{num or '1'}/{den}"


@dataclass(frozen=True)
class TranscendenceCertificate:
    """Witness of transcendence: a unit order no root-of-unity order divides."""

    bad_unit_order: int
    rou_orders: tuple


@dataclass(frozen=True)
class ZetaResult:
    algebraic: bool
    closed_form: object  # ZetaClosedForm or None
    certificate: object  # TranscendenceCertificate or None
    radius_exponent: int  # radius of convergence is q**radius_exponent


def _bad_unit_order(sd: SpectralData):
    ms = [m for m, _ in sd.rou_orders]
    for n, _ in sd.unit_orders:
        if not any(n % m == 0 for m in ms):
            return n
    return None


def closed_form(sd: SpectralData) -> ZetaClosedForm:
    """Expand the inclusion-exclusion product for an algebraic system."""
    bad = _bad_unit_order(sd)
    if bad is not None:
        raise errors.NotAlgebraicError(
            f"unit order {bad} is not divisible by any root-of-unity order"
        )
    ms = []
    for m, mult in sd.rou_orders:
        ms.extend([m] * mult)
    if len(ms) > SUBSET_CAP:
        raise errors.CapExceededError(
            f"{len(ms)} unit-root eigenvalues exceed the subset expansion cap"
        )
    acc = {}
    for bits in range(1 << len(ms)):
        chosen = [ms[i] for i in range(len(ms)) if bits >> i & 1]
        L = lcm(*chosen) if chosen else 1
        sign = -1 if len(chosen) % 2 == 0 else 1
        acc[L] = acc.get(L, Fraction(0)) + Fraction(sign, L)
    factors = tuple(sorted((L, g) for L, g in acc.items() if g != 0))
    return ZetaClosedForm(q=sd.field.q, E=sd.E, factors=factors)


def classify(sd: SpectralData) -> ZetaResult:
    """Decide algebraic versus transcendental and attach the evidence."""
    bad = _bad_unit_order(sd)
    if bad is None:
        return ZetaResult(
            algebraic=True,
            closed_form=closed_form(sd),
            certificate=None,
            radius_exponent=-sd.E,
        )
    return ZetaResult(
        algebraic=False,
        closed_form=None,
        certificate=TranscendenceCertificate(
            bad_unit_order=bad,
            rou_orders=tuple(m for m, _ in sd.rou_orders),
        ),
        radius_exponent=-sd.E,
    )


def _nk_ints(q: int, nks) -> list:
    out = []
    for v in nks:
        out.append(0 if v.is_zero else q**v.exponent)
    return out


def series_from_nk(q: int, nk_source, order: int) -> SeriesTrunc:
    """exp(sum N_k z^k / k) truncated at z^order, exactly.

    nk_source is either a callable k -> NkValue or a sequence of NkValue
    covering k = 1..order.
    """
    if callable(nk_source):
        nks = [nk_source(k) for k in range(1, order + 1)]
    else:
        nks = list(nk_source)
    if len(nks) < order:
        raise errors.MalformedInputError("not enough N_k values for the order")
    N = _nk_ints(q, nks)
    cs = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if N[k - 1]:
                acc += N[k - 1] * cs[n - k]
        cs.append(acc / n)
    return SeriesTrunc(order=order, coeffs=tuple(cs))


def _binomial_series(gamma: Fraction, scale: int, L: int, order: int) -> list:
    """(1 - x)^gamma with x = scale * z^L, as coefficients up to order."""
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    term = Fraction(1)
    j = 1
    while j * L <= order:
        term *= (gamma - (j - 1)) / j
        out[j * L] = term * (-scale) ** j
        j += 1
    return out


def series_from_closed_form(cf: ZetaClosedForm, order: int) -> SeriesTrunc:
    cs = [Fraction(1)] + [Fraction(0)] * order
    for L, gamma in cf.factors:
        fac = _binomial_series(gamma, cf.q ** (cf.E * L), L, order)
        nxt = [Fraction(0)] * (order + 1)
        for i, a in enumerate(cs):
            if a == 0:
                continue
            for j in range(0, order + 1 - i, L):
                if fac[j] != 0:
                    nxt[i + j] += a * fac[j]
        cs = nxt
    return SeriesTrunc(order=order, coeffs=tuple(cs))


def nk_from_series(st: SeriesTrunc) -> list:
    """Invert the exponential recurrence; entries must come out integral."""
    N = []
    cs = st.coeffs
    for k in range(1, st.order + 1):
        acc = k * cs[k]
        for j in range(1, k):
            acc -= N[j - 1] * cs[k - j]
        if acc.denominator != 1:
            raise errors.NonIntegralError(f"N_{k} from series is {acc}")
        N.append(int(acc))
    return N
