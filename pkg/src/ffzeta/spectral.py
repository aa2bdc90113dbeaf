r"""Splitting a characteristic polynomial by the arithmetic of its roots.

Everything downstream (periodic point counts, zeta functions) depends on
three things extracted from a monic P in F[t][X] with P(0) != 0:

  * which roots are roots of unity, and their multiplicative orders;
  * which roots have absolute value one without being roots of unity, and
    the orders of their residues in the algebraic closure of F;
  * for each such residue order n, a negative integer weight w_n measuring
    how closely those roots approach their root-of-unity shadow.

A root of P is a root of unity exactly when it is algebraic over F, and
the product of the corresponding linear factors is the largest monic
divisor of P with coefficients in F.  Writing P as a polynomial in t whose
coefficients are the t-power slices S_j in F[X], that divisor is
gcd_j S_j: it divides every slice, and conversely a common divisor of the
slices divides P.  This stays cheap no matter how large the orders are.

Weights come from resultants.  For an irreducible h in F[X] whose roots
have order n, deg_t Res_X(P', h) counts deg(h) * E plus the (negative)
valuation defects of the unit roots whose residues are roots of h; summing
over the h of order n and subtracting deg(h) * E leaves w_n.  A slower
textbook route through Res_X(P', X^n - 1) and divisor inversion is kept
for cross-checking on small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .gf import order_of_root
from .newton import polygon, unit_residual
from .polycore import Poly, factor, poly_gcd, polyring, resultant


@dataclass(frozen=True)
class SpectralData:
    """Arithmetic invariants of a monic P in F[t][X] with P(0) != 0.

    rou_orders and unit_orders hold (order, eigenvalue multiplicity) pairs
    sorted by order; weights holds (order, w) with w < 0, one entry per
    distinct unit order.  G is the root-of-unity factor in F[X]; Pprime is
    the complementary factor of P; residual is the slope-zero residual of
    Pprime in F[X].
    """

    field: object
    E: int
    rou_orders: tuple
    unit_orders: tuple
    weights: tuple
    G: Poly
    Pprime: Poly
    residual: Poly

    def weight_sum(self, k: int) -> int:
        return sum(w for n, w in self.weights if k % n == 0)

    def is_periodic_time(self, k: int) -> bool:
        """True when some root-of-unity order divides k, killing det(A^k - I)."""
        return any(k % m == 0 for m, _ in self.rou_orders)


def _slices(field, P: Poly):
    """Write P = sum_j S_j(X) t^j; returns the nonzero S_j in F[X]."""
    maxdeg = max(c.degree for c in P.coeffs if c)
    out = []
    for j in range(maxdeg + 1):
        s = Poly(field, [c.coeff(j) for c in P.coeffs])
        if s:
            out.append(s)
    return out


def _slice_gcd(field, P: Poly) -> Poly:
    slices = _slices(field, P)
    g = slices[0]
    for s in slices[1:]:
        g = poly_gcd(g, s)
        if g.degree == 0:
            break
    return g.monic()


def rou_split(field, P: Poly):
    """Split off the root-of-unity factor: P = G * Pprime with G in F[X].

    G is the largest monic divisor of P with constant coefficients; its
    roots are exactly the root-of-unity roots of P, with multiplicity.
    """
    if P.dom.is_zero(P.coeff(0)):
        raise errors.ZeroConstantTermError("zero root contradicts invertibility")
    G = _slice_gcd(field, P)
    if G.degree == 0:
        return G, P
    ring = polyring(field)
    Glift = G.map(ring, lambda c: Poly.const(field, c))
    Pprime = P.exact_div(Glift)
    # the cofactor must have no constant-coefficient divisor left
    if _slice_gcd(field, Pprime).degree != 0:
        raise errors.InternalInvariantError("root-of-unity factor not maximal")
    return G, Pprime


def _orders_of_factors(field, f: Poly):
    """[(order, eigenvalue multiplicity)] for the roots of f in F[X]."""
    agg = {}
    for h, mult in factor(field, f):
        n = order_of_root(field, h)
        agg[n] = agg.get(n, 0) + h.degree * mult
    return tuple(sorted(agg.items()))


def rou_orders(field, G: Poly):
    """Order multiset of the root-of-unity eigenvalues (roots of G in F[X])."""
    if G.degree >= 1 and not G.coeff(0):
        raise errors.ZeroRootError("zero is not a root of unity")
    if G.degree < 1:
        return ()
    return _orders_of_factors(field, G)


def unit_orders(field, Pprime: Poly):
    """Order multiset of the residues of the non-rou unit eigenvalues."""
    if Pprime.degree < 1:
        return ()
    residual = unit_residual(field, Pprime)
    if residual.degree < 1:
        return ()
    return _orders_of_factors(field, residual)


def _lift(ring, field, f: Poly) -> Poly:
    return f.map(ring, lambda c: Poly.const(field, c))


def weights_from_residual(field, Pprime: Poly, E: int, residual: Poly):
    """w_n per distinct unit order n, via per-factor resultants."""
    ring = polyring(field)
    agg = {}
    for h, _mult in factor(field, residual):
        n = order_of_root(field, h)
        r = resultant(Pprime, _lift(ring, field, h))
        if not r:
            raise errors.InternalInvariantError(
                "resultant with the unit factor vanished"
            )
        agg[n] = agg.get(n, 0) + r.degree - h.degree * E
    for n, w in agg.items():
        if w >= 0:
            raise errors.NonNegativeWeightError(f"weight at order {n} is {w}")
    return tuple(sorted(agg.items()))


def weights_by_divisibility(field, Pprime: Poly, E: int, unit_orders):
    """Reference route: W(n) = deg Res(P', X^n - 1) - n E, then inversion.

    Only sensible for small orders; used to cross-check the per-factor
    route in tests.
    """
    ring = polyring(field)
    ns = sorted(n for n, _ in unit_orders)
    out = {}
    for n in ns:
        xn = Poly(ring, [ring.neg(ring.one)] + [ring.zero] * (n - 1) + [ring.one])
        r = resultant(Pprime, xn)
        if not r:
            raise errors.InternalInvariantError(
                "resultant with X^n - 1 vanished on the unit-root factor"
            )
        total = r.degree - n * E
        out[n] = total - sum(out[m] for m in ns if m != n and n % m == 0)
    return tuple(sorted(out.items()))


def weights(field, Pprime: Poly, E: int, unit_orders) -> dict:
    """Map order n -> w_n < 0 over the distinct unit orders.

    Computed by the divisibility route; spectral_data itself uses the
    per-factor route, and the two are compared in tests.
    """
    out = dict(weights_by_divisibility(field, Pprime, E, unit_orders))
    for n, w in out.items():
        if w >= 0:
            raise errors.NonNegativeWeightError(f"weight at order {n} is {w}")
    return out


def spectral_data(field, P: Poly) -> SpectralData:
    """Full spectral decomposition of a monic P in F[t][X], P(0) != 0."""
    if not P.is_monic():
        raise errors.NonMonicError("spectral data needs a monic polynomial")
    np_all = polygon(P)
    E = np_all.entropy_exponent
    G, Pprime = rou_split(field, P)
    rou = _orders_of_factors(field, G) if G.degree > 0 else ()
    if Pprime.degree > 0:
        residual = unit_residual(field, Pprime)
    else:
        residual = Poly.const(field, field.one)
    if residual.degree > 0:
        unit = _orders_of_factors(field, residual)
        weights = weights_from_residual(field, Pprime, E, residual)
    else:
        unit = ()
        weights = ()
    span = np_all.slope_zero_span()
    zero_len = span[1] - span[0] if span else 0
    if G.degree + residual.degree != zero_len:
        raise errors.InternalInvariantError(
            "unit-circle root count does not match the hull"
        )
    return SpectralData(
        field=field,
        E=E,
        rou_orders=rou,
        unit_orders=unit,
        weights=weights,
        G=G,
        Pprime=Pprime,
        residual=residual,
    )
