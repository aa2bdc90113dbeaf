r"""Entropy and periodic-point counts for torus endomorphisms.

A d x d matrix A over F[t] with det A != 0 acts on the torus
(F((1/t))/F[t])^d.  Its k-periodic points form a finite group of order
N_k = |det(A^k - I)| whenever that determinant is nonzero, and the count
is q to the degree of the determinant.  N_k values are therefore carried
as exponents (NkValue); the integer is materialized only on request, with
a cap, since exponents grow linearly in k.

Two independent routes compute N_k:

  * nk_direct / nk_table: power the matrix and take the determinant;
  * nk_spectral: evaluate the closed formula from the spectral data
    (zero when a root-of-unity order divides k, otherwise
    k*E + p^{v_p(k)} * sum of the weights at unit orders dividing k).

Fixed points (k = 1) get two more routes: the Smith normal form of A - I,
and explicit enumeration of solutions of (A - I)x = 0 on the torus, the
latter only for tiny instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import errors
from .funfield import RatFun
from .polycore import Poly, polyring
from .polymat import charpoly, det, identity, mat_mul, mat_sub, matpow_minus_I, smith
from .spectral import SpectralData, spectral_data

INT_RENDER_CAP = 10**4


@dataclass(frozen=True)
class NkValue:
    """A periodic-point count: zero, or q**exponent."""

    is_zero: bool
    exponent: int

    @classmethod
    def zero(cls) -> "NkValue":
        return cls(True, 0)

    @classmethod
    def of(cls, exponent: int) -> "NkValue":
        return cls(False, exponent)

    def as_int(self, q: int) -> int:
        if self.is_zero:
            return 0
        if self.exponent > INT_RENDER_CAP:
            raise errors.CapExceededError(
                f"q**{self.exponent} exceeds the integer rendering cap"
            )
        return q**self.exponent


@dataclass(frozen=True)
class Entropy:
    """Topological entropy E * log q, kept exact as the pair (E, q)."""

    E: int
    q: int

    @property
    def value(self) -> float:
        return self.E * math.log(self.q)


def _charpoly_of(field, A) -> Poly:
    return charpoly(polyring(field), A)


def system_data(field, A) -> SpectralData:
    """Spectral data of A's characteristic polynomial; rejects singular A."""
    ring = polyring(field)
    if not det(ring, A):
        raise errors.SingularMatrixError("matrix determinant is zero")
    return spectral_data(field, _charpoly_of(field, A))


def entropy(field, A) -> Entropy:
    return Entropy(system_data(field, A).E, field.q)


def nk_direct(field, A, k: int) -> NkValue:
    """N_k via det(A^k - I)."""
    if k < 1:
        raise errors.MalformedInputError("k must be a positive integer")
    ring = polyring(field)
    d = det(ring, matpow_minus_I(ring, A, k))
    if not d:
        return NkValue.zero()
    return NkValue.of(d.degree)


def nk_table(field, A, kmax: int) -> list:
    """[N_1, ..., N_kmax] with one matrix product per step."""
    ring = polyring(field)
    ident = identity(ring, len(A))
    out = []
    Ak = ident
    for _ in range(kmax):
        Ak = mat_mul(ring, Ak, A)
        d = det(ring, mat_sub(ring, Ak, ident))
        out.append(NkValue.zero() if not d else NkValue.of(d.degree))
    return out


def nk_spectral(field, sd: SpectralData, k: int) -> NkValue:
    """N_k from the spectral data alone."""
    if k < 1:
        raise errors.MalformedInputError("k must be a positive integer")
    if sd.is_periodic_time(k):
        return NkValue.zero()
    p = field.p
    wild = 1
    kk = k
    while kk % p == 0:
        wild *= p
        kk //= p
    return NkValue.of(k * sd.E + wild * sd.weight_sum(k))


def fixed_points_smith(field, A) -> NkValue:
    """N_1 via the Smith normal form of A - I over F[t]."""
    ring = polyring(field)
    B = mat_sub(ring, A, identity(ring, len(A)))
    sf = smith(field, B)
    if sf.rank < len(A):
        return NkValue.zero()
    return NkValue.of(sum(b.degree for b in sf.invariant_factors))


def _poly_tuples(field, degree_bound: int):
    """All polynomials over F of degree < degree_bound, as coefficient tuples."""
    return product(range(field.q), repeat=degree_bound)


def fixed_points_bruteforce(field, A, cap: int = 100_000) -> int:
    """Count fixed points by enumeration; only viable for tiny systems.

    Solves (A - I)x = z over F(t) for every polynomial vector z of entry
    degree < D and counts distinct torus points among the solutions.  The
    bound starts just above the largest denominator degree and grows until
    the count stabilizes; one stable step proves completeness, because the
    image of the degree-bounded lattice is a subgroup and multiplication
    by t maps the degree-D image into the degree-(D+1) one.
    """
    ring = polyring(field)
    d = len(A)
    B = mat_sub(ring, A, identity(ring, d))
    detB = det(ring, B)
    if not detB:
        raise errors.SingularMatrixError("A - I is singular; fixed points not finite")

    def solve(z):
        # Cramer: x_i = det(B with column i replaced by z) / det B
        out = []
        for i in range(d):
            M = [[B[r][c] if c != i else z[r] for c in range(d)] for r in range(d)]
            out.append(RatFun(field, det(ring, M), detB).frac_part())
        return tuple(out)

    den_deg = 0
    for i in range(d):
        unit = [Poly.const(field, field.one) if r == i else Poly(field) for r in range(d)]
        for x in solve(unit):
            den_deg = max(den_deg, x.den.degree)

    def count(D):
        if field.q ** (d * D) > cap:
            raise errors.CapExceededError(
                f"bruteforce enumeration q**{d * D} exceeds cap {cap}"
            )
        seen = set()
        for flat in _poly_tuples(field, d * D):
            z = [Poly(field, flat[i * D : (i + 1) * D]) for i in range(d)]
            seen.add(solve(z))
        return len(seen)

    D = den_deg + 1
    current = count(D)
    while True:
        nxt = count(D + 1)
        if nxt == current:
            return current
        current = nxt
        D += 1
