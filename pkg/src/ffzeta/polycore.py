"""Dense univariate polynomial engine over pluggable coefficient domains.

A coefficient domain is any object exposing ``zero``, ``one``, the scalar
operations ``add/sub/neg/mul`` (plus ``inv/div`` when ``is_field`` is true,
``exact_div`` otherwise) and the bulk kernels ``poly_add``, ``poly_mul``,
``poly_divmod`` and friends.  The kernels work on plain coefficient lists,
low degree first, so a domain backed by array arithmetic can override them
wholesale; the generic versions here just loop over scalar operations.

Polynomials are immutable: a tuple of coefficients, low degree first, with
no trailing zeros.  The zero polynomial has an empty tuple.  The same class
serves for polynomials in t over a finite field, polynomials in X over a
finite field, and polynomials in X whose coefficients are themselves
polynomials or rational functions; the coefficient domain decides.

Beyond arithmetic this module provides monic gcd, modular exponentiation,
resultants by fraction-free polynomial remainder sequences, irreducibility
testing, and full factorization over a finite field (squarefree split,
distinct-degree split, equal-degree split).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import errors


class Domain:
    """Generic coefficient kernels; scalar ops come from subclasses."""

    is_field = False
    zero = None
    one = None

    # -- scalar interface -------------------------------------------------

    def is_zero(self, a):
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def exact_div(self, a, b):
        if self.is_field:
            return self.div(a, b)
        raise NotImplementedError("domain has no exact division")

    def from_int(self, n: int):
        """Image of the integer n under the unique ring map from Z."""
        out = self.zero
        step = self.one if n >= 0 else self.neg(self.one)
        for _ in range(abs(n)):
            out = self.add(out, step)
        return out

    # -- bulk kernels on raw coefficient lists ----------------------------

    def poly_add(self, xs, ys):
        if len(xs) < len(ys):
            xs, ys = ys, xs
        out = list(xs)
        for i, c in enumerate(ys):
            out[i] = self.add(out[i], c)
        return out

    def poly_neg(self, xs):
        return [self.neg(c) for c in xs]

    def poly_sub(self, xs, ys):
        return self.poly_add(xs, self.poly_neg(ys))

    def poly_scale(self, xs, c):
        return [self.mul(x, c) for x in xs]

    def poly_mul(self, xs, ys):
        if not xs or not ys:
            return []
        out = [self.zero] * (len(xs) + len(ys) - 1)
        for i, a in enumerate(xs):
            if self.is_zero(a):
                continue
            for j, b in enumerate(ys):
                out[i + j] = self.add(out[i + j], self.mul(a, b))
        return out

    def poly_divmod(self, xs, ys):
        """Long division; leading-coefficient steps must divide exactly.

        Always valid over a field or for a monic divisor.  Over a mere
        integral domain each step uses exact_div, which raises when the
        division is not exact.
        """
        m = len(ys) - 1
        dlc = ys[-1]
        monic = dlc == self.one
        rem = list(xs)
        if len(xs) <= m:
            return [], rem
        quo = [self.zero] * (len(xs) - m)
        for j in range(len(xs) - m - 1, -1, -1):
            lead = rem[j + m]
            if self.is_zero(lead):
                continue
            if monic:
                c = lead
            elif self.is_field:
                c = self.div(lead, dlc)
            else:
                c = self.exact_div(lead, dlc)
            quo[j] = c
            rem[j + m] = self.zero
            for i in range(m):
                rem[j + i] = self.sub(rem[j + i], self.mul(c, ys[i]))
        return quo, rem[:m]

    def poly_exact_div(self, xs, ys):
        quo, rem = self.poly_divmod(xs, ys)
        if any(not self.is_zero(c) for c in rem):
            raise errors.InternalInvariantError("polynomial division not exact")
        return quo


class Poly:
    """Immutable dense univariate polynomial over a coefficient domain."""

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs=()):
        cs = list(coeffs)
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        self.dom = dom
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, dom, c):
        return cls(dom, (c,))

    @classmethod
    def x(cls, dom):
        return cls(dom, (dom.zero, dom.one))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            raise errors.ZeroInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.dom.zero

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.dom.one

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.dom.one

    # -- arithmetic ----------------------------------------------------------

    def _wrap(self, raw):
        return Poly(self.dom, raw)

    def __add__(self, other):
        self._check(other)
        return self._wrap(self.dom.poly_add(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return self._wrap(self.dom.poly_sub(list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return self._wrap(self.dom.poly_neg(list(self.coeffs)))

    def __mul__(self, other):
        self._check(other)
        if not self or not other:
            return Poly(self.dom)
        return self._wrap(self.dom.poly_mul(list(self.coeffs), list(other.coeffs)))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.const(self.dom, self.dom.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        if self.dom.is_zero(c):
            return Poly(self.dom)
        return self._wrap(self.dom.poly_scale(list(self.coeffs), c))

    def shift(self, k: int):
        """Multiply by X**k."""
        if not self:
            return self
        return Poly(self.dom, (self.dom.zero,) * k + self.coeffs)

    def __divmod__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = self.dom.poly_divmod(list(self.coeffs), list(other.coeffs))
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self._wrap(self.dom.poly_exact_div(list(self.coeffs), list(other.coeffs)))

    def monic(self):
        if not self:
            raise errors.ZeroInputError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        if not self.dom.is_field:
            raise errors.NonMonicError("cannot normalize over a non-field")
        return self.scale(self.dom.inv(self.lc))

    def derivative(self):
        dom = self.dom
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(dom.mul(self.coeffs[i], dom.from_int(i)))
        return Poly(dom, out)

    def eval(self, x):
        """Horner evaluation at a domain element."""
        dom = self.dom
        acc = dom.zero
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, x), c)
        return acc

    def map(self, new_dom, fn):
        """Apply fn to every coefficient, landing in new_dom."""
        return Poly(new_dom, [fn(c) for c in self.coeffs])

    # -- plumbing ------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly) or other.dom != self.dom:
            raise TypeError("mixed-domain polynomial arithmetic")

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.dom == other.dom
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((Poly, self.coeffs))

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.dom.is_zero(c):
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                head = "" if c == self.dom.one else f"{cs}*"
                parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.format()})"


class PolyRing(Domain):
    """A polynomial ring viewed as a coefficient domain for outer polynomials."""

    is_field = False

    def __init__(self, base: Domain):
        self.base = base
        self.zero = Poly(base)
        self.one = Poly.const(base, base.one)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return not a

    def exact_div(self, a, b):
        return a.exact_div(b)

    def from_int(self, n):
        return Poly.const(self.base, self.base.from_int(n))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.base == other.base

    def __hash__(self):
        return hash((PolyRing, self.base))

    def __repr__(self):
        return f"PolyRing({self.base!r})"


@lru_cache(maxsize=None)
def polyring(base) -> PolyRing:
    return PolyRing(base)


# ---------------------------------------------------------------------------
# gcd, modular exponentiation
# ---------------------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over a coefficient field."""
    if not f and not g:
        raise errors.BothZeroError("gcd(0, 0) is undefined")
    if not f.dom.is_field:
        raise TypeError("poly_gcd needs field coefficients")
    while g:
        f, g = g, f % g
    return f.monic()


def modpow(base: Poly, n: int, modulus: Poly) -> Poly:
    """base**n mod modulus by binary exponentiation.

    The modulus must be monic of degree at least 1; monicity keeps the
    reduction valid over any coefficient domain, fields or not.
    """
    if not modulus.is_monic() or modulus.degree < 1:
        raise errors.NonMonicModulusError("modulus must be monic of positive degree")
    if n < 0:
        raise ValueError("negative exponent")
    dom = base.dom
    out = Poly.const(dom, dom.one) % modulus
    acc = base % modulus
    while n:
        if n & 1:
            out = (out * acc) % modulus
        n >>= 1
        if n:
            acc = (acc * acc) % modulus
    return out


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------


def _prem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder: rem(lc(g)**(deg f - deg g + 1) * f, g), no divisions."""
    dom = f.dom
    ell = g.lc
    r = f
    steps = f.degree - g.degree + 1
    for _ in range(steps):
        if not r or r.degree < g.degree:
            r = r.scale(ell)
            continue
        lead = r.lc
        r = r.scale(ell) - g.shift(r.degree - g.degree).scale(lead)
    return r


def _coeff_content(f: Poly):
    """Content of the coefficients, used to keep remainder chains primitive.

    Over a field everything is a unit, so the content is one and the chain
    degenerates to the plain remainder sequence.  Over F[t] the content is
    the monic gcd of the coefficients.
    """
    dom = f.dom
    if dom.is_field:
        return dom.one
    cont = None
    for c in f.coeffs:
        if dom.is_zero(c):
            continue
        cont = c if cont is None else poly_gcd(cont, c)
        if cont.is_one():
            return dom.one
    return cont.monic()


def resultant(f: Poly, g: Poly):
    """Resultant of f and g as an element of the coefficient domain.

    Res(f, g) = lc(f)**deg(g) * product of g over the roots of f.  Computed
    by a primitive (fraction-free) pseudo-remainder sequence: every stored
    remainder is divided by the content of its coefficients, and the exact
    scalar corrections are folded back through the chain at the end.  Over a
    finite field this degenerates to the ordinary remainder sequence; over
    F[t] no fractions ever appear.  Inputs over the fraction field F(t) are
    cleared to F[t] first.
    """
    if not f or not g:
        raise errors.ZeroInputError("resultant of the zero polynomial")
    dom = f.dom
    clear = getattr(dom, "clear_denominators", None)
    if clear is not None:
        # Rational-function coefficients: clear to the polynomial ring,
        # compute there, and divide the homogeneity correction back out.
        fi, df = clear(f)
        gi, dg = clear(g)
        r = resultant(fi, gi)
        return dom.from_fraction(r, df ** g.degree * dg ** f.degree)

    sign_flip = False
    if f.degree < g.degree:
        sign_flip = (f.degree * g.degree) % 2 == 1
        f, g = g, f

    def dpow(c, k):
        out = dom.one
        for _ in range(k):
            out = dom.mul(out, c)
        return out

    if g.degree == 0:
        r = dpow(g.coeffs[0], f.degree)
        return dom.neg(r) if sign_flip else r

    # Walk the remainder chain, recording per-level correction data.
    levels = []
    a, b = f, g
    while True:
        m, n = a.degree, b.degree
        ell = b.lc
        rem = _prem(a, b)
        if not rem:
            return dom.zero
        beta = _coeff_content(rem)
        if beta != dom.one:
            rem = Poly(dom, dom.poly_exact_div(list(rem.coeffs), [beta]))
        s = rem.degree
        # Res(a, b) = (-1)^(m n) * beta^n * Res(b, rem) / ell^((m-n+1)n - m + s)
        levels.append(((m * n) % 2 == 1, beta, n, ell, (m - n + 1) * n - m + s))
        if s == 0:
            base = dpow(rem.coeffs[0], b.degree)
            break
        a, b = b, rem

    res = base
    for odd, beta, n, ell, k in reversed(levels):
        num = dom.mul(dpow(beta, n), res)
        res = dom.exact_div(num, dpow(ell, k)) if k else num
        if odd:
            res = dom.neg(res)
    if sign_flip:
        res = dom.neg(res)
    return res


# ---------------------------------------------------------------------------
# irreducibility and factorization over a finite field
# ---------------------------------------------------------------------------


def _small_prime_factors(n: int):
    """Distinct prime factors by trial division; fine at 64-bit desk scale."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _frobenius_powers(field, f: Poly, upto: int):
    """[X mod f, X^q mod f, X^(q^2) mod f, ...] up to exponent q^upto."""
    x = Poly.x(field) % f
    out = [x]
    for _ in range(upto):
        out.append(modpow(out[-1], field.q, f))
    return out

def is_irreducible(field, f: Poly) -> bool:
    """Rabin test: X^(q^n) = X mod f and gcd checks at maximal subexponents."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    pows = _frobenius_powers(field, f, n)
    x = Poly.x(field)
    if (pows[n] - x) % f:
        return False
    for r in _small_prime_factors(n):
        h = pows[n // r] - x
        if not h:
            return False
        if not poly_gcd(f, h).is_one():
            return False
    return True


def _pth_root(field, f: Poly) -> Poly:
    # f is a polynomial in X^p; c -> c^(q/p) inverts the Frobenius on GF(q)
    p = field.p
    root_exp = field.q // p
    out = [field.pow(f.coeff(i * p), root_exp) for i in range(f.degree // p + 1)]
    return Poly(field, out)


def squarefree_parts(field, f: Poly):
    """Characteristic-p squarefree decomposition of a monic polynomial.

    Returns a list of (g, m) with g monic squarefree, pairwise coprime, and
    f = prod g**m.
    """
    out = []
    c = poly_gcd(f, f.derivative()) if f.derivative() else f
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        z = w.exact_div(y)
        if not z.is_one():
            out.append((z, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if not c.is_one():
        for g, m in squarefree_parts(field, _pth_root(field, c)):
            out.append((g, m * field.p))
    return out


def _distinct_degree(field, f: Poly):
    """Split a monic squarefree f into (product of degree-d irreducibles, d)."""
    out = []
    rest = f
    h = Poly.x(field) % rest
    d = 0
    while rest.degree > 0 and rest.degree > 2 * d:
        d += 1
        h = modpow(h, field.q, rest)
        g = poly_gcd(rest, h - Poly.x(field))
        if not g.is_one():
            out.append((g, d))
            rest = rest.exact_div(g)
            if rest.degree > 0:
                h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _splitter_candidates(field, maxdeg: int, budget: int):
    """Deterministic enumeration of candidate splitting elements."""
    count = 0
    for deg in range(1, max(maxdeg, 1) + 1):
        for lead in range(1, field.q):
            for rest in itertools.product(range(field.q), repeat=deg):
                yield Poly(field, list(rest) + [lead])
                count += 1
                if count >= budget:
                    return


def _try_split(field, f: Poly, d: int, alpha: Poly):
    if field.p == 2:
        # Absolute trace to GF(2): alpha + alpha^2 + ... + alpha^(2^(ed-1))
        k = field.e * d
        u = alpha % f
        s = u
        for _ in range(k - 1):
            u = modpow(u, 2, f)
            s = s + u
        s = s % f
        cand = s
    else:
        s = modpow(alpha, (field.q ** d - 1) // 2, f)
        cand = s - Poly.const(field, field.one)
    if not cand:
        return None
    g = poly_gcd(f, cand)
    if 0 < g.degree < f.degree:
        return g
    return None


def _equal_degree(field, f: Poly, d: int, seed: int):
    if f.degree == d:
        return [f]
    for alpha in _splitter_candidates(field, min(f.degree - 1, 3), 5000):
        g = _try_split(field, f, d, alpha)
        if g is not None:
            rest = f.exact_div(g)
            return _equal_degree(field, g, d, seed) + _equal_degree(field, rest, d, seed)
    # Seeded fallback for fields too large to enumerate quickly.
    import random

    rng = random.Random(seed)
    while True:
        alpha = Poly(field, [rng.randrange(field.q) for _ in range(f.degree)] + [1])
        if alpha.degree < 1:
            continue
        g = _try_split(field, f, d, alpha)
        if g is not None:
            rest = f.exact_div(g)
            return _equal_degree(field, g, d, seed) + _equal_degree(field, rest, d, seed)


def factor(field, f: Poly, seed: int = 0):
    """Full factorization over GF(q).

    Returns a list of (irreducible monic factor, multiplicity), sorted by
    degree then by coefficient tuple, so the output is deterministic.  The
    leading coefficient is dropped: f = lc(f) * prod factor**mult.
    """
    if not f:
        raise errors.ZeroInputError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    found = {}
    for g, mult in squarefree_parts(field, f.monic()):
        for part, d in _distinct_degree(field, g):
            for irr in _equal_degree(field, part, d, seed):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda it: (it[0].degree, it[0].coeffs))
