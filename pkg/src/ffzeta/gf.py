r"""Finite fields GF(p^e) with integer-packed elements.

An element of GF(p^e) is a plain Python int in ``range(p**e)``: the base-p
digits are the coefficients of the residue polynomial in the generator z,
low digit first.  For e = 1 this is just the residue mod p.  Packing keeps
elements hashable and lets the bulk polynomial kernels run on int64 numpy
arrays; every kernel converts back to Python ints on the way out.

Scalar multiplication for e >= 2 goes through discrete log/exp tables over
a fixed multiplicative generator, built once at construction.  Table
construction is linear in q, which motivates the hard cap q <= 2**20 for
extension fields; prime fields only need p < 2**63.

The public constructors and queries:

    make_field(p, e=1, modulus=None)   build (and cache) a field
    elem_order(field, a)               multiplicative order of a nonzero a
    order_of_root(field, f)            order of a root of an irreducible f
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import errors
from .polycore import Domain, Poly, is_irreducible, modpow

PRIME_CAP = 2**63
EXT_CAP = 2**20

# Below this length the scalar loops beat numpy round trips.
NP_CUTOFF = 24

FElem = int


# ---------------------------------------------------------------------------
# integer utilities
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of an odd composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise errors.CapExceededError(f"failed to factor {n}")


def factorint(n: int) -> dict:
    """Prime factorization as {prime: multiplicity}; n >= 1."""
    out: dict = {}
    for d in (2, 3, 5):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 7
    while d * d <= n and d < 1 << 16:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return out


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------


class Field(Domain):
    """GF(p^e) acting as a coefficient domain for the polynomial engine."""

    is_field = True
    zero = 0
    one = 1

    def __init__(self, p: int, e: int, modulus: tuple):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus  # monic, length e+1, entries in range(p)
        if e >= 2:
            self._build_tables()
        self._np_scalar_ok = p < 2**31
        # p-power place values, shared by the digit pack/unpack kernels
        self._pw = np.power(np.int64(p), np.arange(e, dtype=np.int64))

    # -- construction helpers ---------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Product before log tables exist: digit convolution mod modulus."""
        p, e = self.p, self.e
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        # fold z^k for k >= e down using z^e = -(low part of modulus)
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            prod[k] = 0
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * self.modulus[i]
        return sum((prod[i] % p) * p**i for i in range(e))

    def _raw_pow(self, a: int, k: int) -> int:
        out = 1
        while k:
            if k & 1:
                out = self._raw_mul(out, a)
            a = self._raw_mul(a, a)
            k >>= 1
        return out

    def _build_tables(self):
        q = self.q
        fac = factorint(q - 1)
        gen = None
        for cand in range(2, q):
            if all(self._raw_pow(cand, (q - 1) // ell) != 1 for ell in fac):
                gen = cand
                break
        if gen is None:
            raise errors.InternalInvariantError("no multiplicative generator found")
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        # multiplication by z as a digit map, used to build per-scalar maps
        lowneg = [(-c) % self.p for c in self.modulus[: self.e]]
        self._zred = lowneg

    # -- scalar arithmetic ---------------------------------------------------

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        p = self.p
        if self.e == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        pw = 1
        for _ in range(self.e):
            out += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a):
        p = self.p
        if self.e == 1:
            return (-a) % p
        if p == 2:
            return a
        out = 0
        pw = 1
        for _ in range(self.e):
            out += ((-a) % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def exact_div(self, a, b):
        return self.div(a, b)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        if self.e == 1:
            return pow(a, k, self.p)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def from_int(self, n: int):
        return n % self.p

    # -- numpy digit helpers ---------------------------------------------------

    def _unpack(self, arr):
        """int64 packed array -> (e, n) digit matrix."""
        return (arr[None, :] // self._pw[:, None]) % self.p

    def _pack(self, digits):
        return (digits % self.p * self._pw[:, None]).sum(axis=0)

    def _scalar_map(self, c: int):
        """Digits of c*z^j for j < e, as an (e, e) int64 matrix column-wise."""
        p, e = self.p, self.e
        col = [(c // p**i) % p for i in range(e)]
        cols = [col]
        for _ in range(e - 1):
            top = col[-1]
            col = [0] + col[:-1]
            if top:
                col = [(col[i] + top * self._zred[i]) % p for i in range(e)]
            cols.append(col)
        return np.array(cols, dtype=np.int64).T

    # -- bulk kernels ------------------------------------------------------------

    def poly_add(self, xs, ys):
        if max(len(xs), len(ys)) < NP_CUTOFF or not self._np_scalar_ok:
            return super().poly_add(xs, ys)
        n = max(len(xs), len(ys))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: len(xs)] = xs
        b[: len(ys)] = ys
        if self.e == 1:
            return ((a + b) % self.p).tolist()
        if self.p == 2:
            return np.bitwise_xor(a, b).tolist()
        return self._pack(self._unpack(a) + self._unpack(b)).tolist()

    def poly_sub(self, xs, ys):
        if max(len(xs), len(ys)) < NP_CUTOFF or not self._np_scalar_ok:
            return super().poly_sub(xs, ys)
        n = max(len(xs), len(ys))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: len(xs)] = xs
        b[: len(ys)] = ys
        if self.e == 1:
            return ((a - b) % self.p).tolist()
        if self.p == 2:
            return np.bitwise_xor(a, b).tolist()
        return self._pack(self._unpack(a) - self._unpack(b) + self.p).tolist()

    def poly_neg(self, xs):
        if self.p == 2:
            return list(xs)
        if len(xs) < NP_CUTOFF or not self._np_scalar_ok:
            return super().poly_neg(xs)
        a = np.asarray(xs, dtype=np.int64)
        if self.e == 1:
            return ((-a) % self.p).tolist()
        return self._pack(-self._unpack(a) + self.p).tolist()

    def poly_scale(self, xs, c):
        if c == 0:
            return []
        if c == 1:
            return list(xs)
        if len(xs) < NP_CUTOFF or not self._np_scalar_ok:
            return super().poly_scale(xs, c)
        a = np.asarray(xs, dtype=np.int64)
        if self.e == 1:
            return ((a * c) % self.p).tolist()
        return self._pack(self._scalar_map(c) @ self._unpack(a)).tolist()

    def poly_mul(self, xs, ys):
        if min(len(xs), len(ys)) == 0:
            return []
        if min(len(xs), len(ys)) < 2 or max(len(xs), len(ys)) < NP_CUTOFF:
            return super().poly_mul(xs, ys)
        if self.e == 1:
            # accumulated convolution terms must stay inside int64
            if min(len(xs), len(ys)) * (self.p - 1) ** 2 >= 2**62:
                return super().poly_mul(xs, ys)
            a = np.asarray(xs, dtype=np.int64)
            b = np.asarray(ys, dtype=np.int64)
            return (np.convolve(a, b) % self.p).tolist()
        da = self._unpack(np.asarray(xs, dtype=np.int64))
        db = self._unpack(np.asarray(ys, dtype=np.int64))
        e = self.e
        n = len(xs) + len(ys) - 1
        acc = np.zeros((2 * e - 1, n), dtype=np.int64)
        for i in range(e):
            if not da[i].any():
                continue
            for j in range(e):
                if not db[j].any():
                    continue
                acc[i + j] += np.convolve(da[i], db[j])
        acc %= self.p
        for k in range(2 * e - 2, e - 1, -1):
            row = acc[k]
            if not row.any():
                continue
            for i in range(e):
                if self._zred[i]:
                    acc[k - e + i] += row * self._zred[i]
        out = acc[:e] % self.p
        return self._pack(out).tolist()

    def poly_divmod(self, xs, ys):
        m = len(ys) - 1
        if len(xs) <= m or len(xs) < NP_CUTOFF or not self._np_scalar_ok:
            return super().poly_divmod(xs, ys)
        dlc_inv = self.inv(ys[-1])
        if self.e == 1:
            rem = np.asarray(xs, dtype=np.int64).copy()
            div = np.asarray(ys[:m], dtype=np.int64)
            quo = [0] * (len(xs) - m)
            for j in range(len(xs) - m - 1, -1, -1):
                lead = int(rem[j + m])
                if lead == 0:
                    continue
                c = lead * dlc_inv % self.p
                quo[j] = c
                if m:
                    rem[j : j + m] = (rem[j : j + m] - c * div) % self.p
            return quo, rem[:m].tolist()
        dd = self._unpack(np.asarray(xs, dtype=np.int64))
        dv = self._unpack(np.asarray(ys[:m], dtype=np.int64)) if m else None
        quo = [0] * (len(xs) - m)
        pwl = [self.p**i for i in range(self.e)]
        for j in range(len(xs) - m - 1, -1, -1):
            lead = int(sum(int(dd[i, j + m]) * pwl[i] for i in range(self.e)))
            if lead == 0:
                continue
            c = self.mul(lead, dlc_inv)
            quo[j] = c
            dd[:, j + m] = 0
            if m:
                dd[:, j : j + m] = (dd[:, j : j + m] - self._scalar_map(c) @ dv) % self.p
        rem = self._pack(dd[:, :m]).tolist() if m else []
        return quo, rem

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((Field, self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _default_modulus(p: int, e: int) -> tuple:
    """First monic irreducible of degree e over GF(p), by packed-int order."""
    base = Field(p, 1, (0, 1))
    for packed in range(p**e, 2 * p**e):
        coeffs = [(packed // p**i) % p for i in range(e + 1)]
        if is_irreducible(base, Poly(base, coeffs)):
            return tuple(coeffs)
    raise errors.InternalInvariantError("no irreducible modulus found")


def _validate_modulus(p: int, e: int, modulus) -> tuple:
    try:
        coeffs = tuple(int(c) for c in modulus)
    except (TypeError, ValueError):
        raise errors.MalformedInputError("modulus must be a list of integers")
    if len(coeffs) != e + 1:
        raise errors.DegreeMismatchError(
            f"modulus must have degree {e}, got degree {len(coeffs) - 1}"
        )
    if any(c < 0 or c >= p for c in coeffs):
        raise errors.MalformedInputError("modulus coefficients must lie in [0, p)")
    if coeffs[-1] != 1:
        raise errors.MalformedInputError("modulus must be monic")
    if e >= 2:
        base = Field(p, 1, (0, 1))
        if not is_irreducible(base, Poly(base, coeffs)):
            raise errors.ReducibleModulusError("modulus is reducible over GF(p)")
    return coeffs


@lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple) -> Field:
    return Field(p, e, modulus)


def make_field(p: int, e: int = 1, modulus=None) -> Field:
    """Build GF(p**e), reusing a cached instance when possible.

    The modulus, if given, is a monic irreducible polynomial over GF(p) of
    degree e as a low-first coefficient list.  Without one, the monic
    irreducible with the smallest packed-integer value is used, e.g.
    z^2 + z + 1 for GF(4) and z^2 + 1 for GF(9).
    """
    if not isinstance(p, int) or not isinstance(e, int):
        raise errors.MalformedInputError("p and e must be integers")
    if e < 1:
        raise errors.MalformedInputError("extension degree must be at least 1")
    if p >= PRIME_CAP:
        raise errors.CapExceededError(f"prime modulus must be below 2**63, got {p}")
    if not _is_prime(p):
        raise errors.NotPrimeError(f"{p} is not prime")
    if e >= 2 and p**e > EXT_CAP:
        raise errors.CapExceededError(
            f"extension field order {p}**{e} exceeds the 2**20 table cap"
        )
    if modulus is None:
        coeffs = (0, 1) if e == 1 else _default_modulus(p, e)
    else:
        coeffs = _validate_modulus(p, e, modulus)
    return _cached_field(p, e, coeffs)


# ---------------------------------------------------------------------------
# element orders
# ---------------------------------------------------------------------------


def _order_from(group_order: int, is_one) -> int:
    """Order of an element given x^group_order = 1 and a power-is-one test."""
    order = group_order
    for ell in factorint(group_order):
        while order % ell == 0 and is_one(order // ell):
            order //= ell
    return order


def elem_order(field: Field, a: int) -> int:
    """Multiplicative order of a in GF(q)*."""
    if a == 0:
        raise errors.ZeroElementError("zero has no multiplicative order")
    if not isinstance(a, int) or a < 0 or a >= field.q:
        raise errors.MalformedInputError("element out of range")
    return _order_from(field.q - 1, lambda k: field.pow(a, k) == 1)


def order_of_root(field: Field, f: Poly) -> int:
    """Multiplicative order of any root of the monic irreducible f.

    The roots of an irreducible polynomial are Frobenius conjugates, so
    they share one order; it is computed inside GF(q)[X]/(f) as the order
    of the class of X.
    """
    if f.degree < 1:
        raise errors.ReducibleError("constant polynomials have no roots")
    f = f.monic()
    if f.coeff(0) == 0:
        if f.degree == 1:
            raise errors.RootIsZeroError("the root of X is zero")
        raise errors.ReducibleError("X divides the polynomial")
    if not is_irreducible(field, f):
        raise errors.ReducibleError("polynomial is reducible")
    delta = f.degree
    group = field.q**delta - 1
    if f.degree == 1:
        # root is -f(0), order computable without modular arithmetic
        return elem_order(field, field.neg(f.coeff(0)))
    x = Poly.x(field)
    one = Poly.const(field, field.one)
    return _order_from(group, lambda k: modpow(x, k, f) == one)
