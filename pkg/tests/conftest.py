"""Shared fixtures, element builders, and hypothesis strategies."""

import pytest
from hypothesis import settings, strategies as st

from ffzeta.corpus import corpus
from ffzeta.polycore import Poly, polyring

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def tpoly(field, *coeffs):
    """Polynomial in t from low-first packed field elements."""
    assert all(0 <= c < field.q for c in coeffs)
    return Poly(field, list(coeffs))


def xpoly(field, *tcoeffs):
    """Polynomial in X over F[t]; each argument is one t-coefficient tuple."""
    ring = polyring(field)
    return Poly(ring, [tpoly(field, *c) for c in tcoeffs])


def tmat(field, rows):
    """Matrix of t-polynomials from nested coefficient lists."""
    return [[tpoly(field, *e) for e in row] for row in rows]


def felems(field):
    return st.integers(0, field.q - 1)


def tpolys(field, max_deg=3, min_deg=None):
    """Strategy for polynomials in t of degree <= max_deg (>= min_deg if set)."""
    base = st.lists(felems(field), min_size=0, max_size=max_deg + 1).map(
        lambda cs: Poly(field, cs)
    )
    if min_deg is None:
        return base
    return base.filter(lambda f: f.degree >= min_deg)


def monic_tpolys(field, max_deg=4, min_deg=1):
    def build(cs):
        return Poly(field, cs + [field.one])

    return st.integers(min_deg, max_deg).flatmap(
        lambda d: st.lists(felems(field), min_size=d, max_size=d).map(build)
    )


def xpolys(field, max_xdeg=4, max_tdeg=2, monic=True, nonzero_const=False):
    """Strategy for polynomials in X with F[t] coefficients."""
    ring = polyring(field)
    coeff = st.lists(felems(field), min_size=0, max_size=max_tdeg + 1).map(
        lambda cs: Poly(field, cs)
    )

    def build(parts):
        lead = Poly.const(field, field.one) if monic else parts.pop()
        return Poly(ring, parts + [lead])

    out = st.integers(1, max_xdeg).flatmap(
        lambda d: st.lists(coeff, min_size=d, max_size=d + (0 if monic else 1)).map(
            build
        )
    )
    out = out.filter(lambda f: f.degree >= 1)
    if nonzero_const:
        out = out.filter(lambda f: bool(f.coeff(0)))
    return out


@pytest.fixture(scope="session")
def corp():
    return corpus()
