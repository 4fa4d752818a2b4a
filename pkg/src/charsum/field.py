"""Finite field contexts F_q = F_{p^n} with exp/dlog tables and the absolute trace.

Elements are canonical integer indices: for n = 1 the representative in
[0, p); for n > 1 the base-p digit encoding of the coefficient vector
(c_0 + c_1*p + ... + c_{n-1}*p^{n-1}, constant term least significant).
All multiplicative structure is table-driven: a fixed canonical generator
g, an exp table g^k, and its inverse dlog table, so that characters and
character sums downstream are O(1) lookups per element.
"""

from __future__ import annotations

import numpy as np

DEFAULT_SIZE_CAP = 65536
DEFAULT_TOL = 1e-9


class FieldError(ValueError):
    """Invalid field construction parameters."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p (coefficient tuples, ascending degree).
# Only used during construction; runtime arithmetic is table-driven.
# ---------------------------------------------------------------------------

def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    # mod is monic
    dm = len(mod) - 1
    a = list(a)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, mod, p)


def _poly_powmod(a, e, mod, p):
    result = [1] + [0] * (len(mod) - 2)
    base = _poly_mod(list(a), mod, p)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a = list(_poly_trim(tuple(c % p for c in a)))
    b = list(_poly_trim(tuple(c % p for c in b)))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        bm = tuple((c * inv_lead) % p for c in b)
        r = _poly_trim(tuple(_poly_mod(a, bm, p))) if len(bm) > 1 else ()
        a, b = b, list(r)
    return tuple(a)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic degree-n polynomial over F_p.

    Uses the standard criterion: x^(p^n) == x (mod f), and
    gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
    """
    n = len(poly) - 1
    if n == 1:
        return True
    x = (0, 1)
    xq = _poly_powmod(x, p**n, poly, p)
    target = _poly_mod([0, 1], poly, p)
    if _poly_trim(tuple(xq)) != _poly_trim(tuple(target)):
        return False
    for r in prime_factors(n):
        h = _poly_powmod(x, p ** (n // r), poly, p)
        diff = [(hi - ti) % p for hi, ti in zip(h, target)]
        g = _poly_gcd(diff, list(poly), p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Candidates are ordered by the coefficient tuple (a_{n-1}, ..., a_0),
    highest-degree coefficient most significant; that order coincides with
    integer order of the encoding sum(a_i * p^i).
    """
    for code in range(p**n):
        digits = []
        v = code
        for _ in range(n):
            digits.append(v % p)
            v //= p
        poly = tuple(digits) + (1,)  # (a_0, ..., a_{n-1}, 1) ascending
        if _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")


class FieldCtx:
    """Immutable description of F_q with generator, dlog table, and trace.

    Attributes:
        p, n, q: characteristic, extension degree, order q = p^n.
        modulus: monic irreducible (coeff tuple, ascending) or None for n = 1.
        g: canonical generator index.
        exp: int64 array, exp[k] = index of g^k for k in [0, q-2].
        dlog: int64 array over all indices; dlog[0] = -1 sentinel.
        trace_tab: int64 array, absolute trace to F_p per index.
        tol: base absolute tolerance per summand (scaled by sum length).
    """

    def __init__(self, p: int, n: int, size_cap: int, tol: float):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if n < 1:
            raise FieldError(f"extension degree must be >= 1, got {n}")
        q = p**n
        if q > size_cap:
            raise FieldError(f"q = {q} exceeds size cap {size_cap}")
        self.p = p
        self.n = n
        self.q = q
        self.size_cap = size_cap
        self.tol = tol
        self.modulus = None if n == 1 else _smallest_irreducible(p, n)
        self._pow_basis = [p**i for i in range(n)]
        self.g = self._find_generator()
        self.exp, self.dlog = self._build_log_tables()
        self.trace_tab = self._build_trace_table()
        self._cache: dict = {}  # derived tables, single-writer init

    # -- construction helpers -------------------------------------------------

    def _raw_mul(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x * y) % self.p
        a = self.to_coeffs(x)
        b = self.to_coeffs(y)
        prod = _poly_mulmod(list(a), list(b), self.modulus, self.p)
        return self.from_coeffs(prod)

    def _raw_pow(self, x: int, e: int) -> int:
        result = 1
        base = x
        while e > 0:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        factors = prime_factors(order)
        for cand in range(1, self.q):
            if all(self._raw_pow(cand, order // r) != 1 for r in factors):
                return cand
        raise FieldError("no generator found")  # unreachable for a true field

    def _build_log_tables(self):
        order = self.q - 1
        exp = np.zeros(order, dtype=np.int64)
        dlog = np.full(self.q, -1, dtype=np.int64)
        acc = 1
        for k in range(order):
            exp[k] = acc
            dlog[acc] = k
            acc = self._raw_mul(acc, self.g)
        if acc != 1:
            raise FieldError("generator order check failed")
        return exp, dlog

    def _build_trace_table(self):
        tr = np.zeros(self.q, dtype=np.int64)
        for x in range(self.q):
            acc = x
            total = x
            for _ in range(self.n - 1):
                acc = self._raw_pow(acc, self.p)
                total = self.add(total, acc)
            if self.n > 1:
                coeffs = self.to_coeffs(total)
                if any(coeffs[1:]):
                    raise FieldError("trace left the prime subfield")
                total = coeffs[0]
            tr[x] = total
        return tr

    # -- element codec ---------------------------------------------------------

    def to_coeffs(self, x: int) -> tuple[int, ...]:
        """Digit decomposition (c_0, ..., c_{n-1}) of an element index."""
        out = []
        for _ in range(self.n):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        x = 0
        for c, b in zip(coeffs, self._pow_basis):
            x += (c % self.p) * b
        return x

    def embed(self, k: int) -> int:
        """Embed an integer constant into the prime subfield."""
        return k % self.p

    # -- arithmetic -------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        a = self.to_coeffs(x)
        b = self.to_coeffs(y)
        return self.from_coeffs((ai + bi) % self.p for ai, bi in zip(a, b))

    def neg(self, x: int) -> int:
        if self.n == 1:
            return (-x) % self.p
        return self.from_coeffs((-c) % self.p for c in self.to_coeffs(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        L = self.q - 1
        return int(self.exp[(self.dlog[x] + self.dlog[y]) % L])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero")
        L = self.q - 1
        return int(self.exp[(-self.dlog[x]) % L])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("inversion of zero")
            return 0 if e else 1
        L = self.q - 1
        return int(self.exp[(self.dlog[x] * e) % L])

    def dlog_of(self, x: int) -> int:
        """Discrete log base g; g^result = x. Raises on x = 0."""
        if x == 0:
            raise ZeroDivisionError("dlog of zero")
        return int(self.dlog[x])

    def trace(self, x: int) -> int:
        """Absolute trace to F_p: x + x^p + ... + x^(p^(n-1))."""
        return int(self.trace_tab[x])

    # -- vectorized arithmetic over index arrays ----------------------------------

    def add_vec(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        if self.n == 1:
            return (xs + ys) % self.p
        pb = np.array(self._pow_basis, dtype=np.int64)
        dx = (xs[..., None] // pb) % self.p
        dy = (ys[..., None] // pb) % self.p
        return ((dx + dy) % self.p) @ pb

    def neg_vec(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if self.n == 1:
            return (-xs) % self.p
        pb = np.array(self._pow_basis, dtype=np.int64)
        dx = (xs[..., None] // pb) % self.p
        return ((-dx) % self.p) @ pb

    def mul_vec(self, xs: np.ndarray, y: int) -> np.ndarray:
        """Elementwise product of an index array with a fixed element."""
        xs = np.asarray(xs, dtype=np.int64)
        out = np.zeros_like(xs)
        if y == 0:
            return out
        L = self.q - 1
        nz = xs != 0
        out[nz] = self.exp[(self.dlog[xs[nz]] + self.dlog[y]) % L]
        return out

    def pow_vec(self, xs: np.ndarray, e: int) -> np.ndarray:
        """Elementwise e-th power, e >= 1."""
        if e < 1:
            raise ValueError("pow_vec needs e >= 1")
        xs = np.asarray(xs, dtype=np.int64)
        out = np.zeros_like(xs)
        L = self.q - 1
        nz = xs != 0
        out[nz] = self.exp[(self.dlog[xs[nz]] * e) % L]
        return out

    def mul_arr(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Elementwise product of two index arrays (broadcasting)."""
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        xs, ys = np.broadcast_arrays(xs, ys)
        out = np.zeros(xs.shape, dtype=np.int64)
        L = self.q - 1
        nz = (xs != 0) & (ys != 0)
        out[nz] = self.exp[(self.dlog[xs[nz]] + self.dlog[ys[nz]]) % L]
        return out

    # -- iteration / misc --------------------------------------------------------

    def elements(self):
        return range(self.q)

    def units(self):
        """Nonzero elements in canonical index order."""
        return range(1, self.q)

    def minus_one(self) -> int:
        return self.neg(1)

    def sqrt_canonical(self, x: int) -> int:
        """Square root with dlog in [0, (q-1)/2), i.e. half the dlog of x.

        Deterministic branch choice; the other root is its negation.
        Requires odd q and a square x.
        """
        if self.q % 2 == 0:
            raise FieldError("canonical square root needs odd q")
        if x == 0:
            return 0
        k = self.dlog_of(x)
        if k % 2:
            raise ValueError(f"element {x} is not a square")
        return int(self.exp[k // 2])

    def __repr__(self):
        if self.n == 1:
            return f"FieldCtx(q={self.q})"
        return f"FieldCtx(q={self.p}^{self.n}, modulus={self.modulus})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.n, self.size_cap) == (other.p, other.n, other.size_cap)
        )

    def __hash__(self):
        return hash((self.p, self.n))


def make_field(
    p: int,
    n: int = 1,
    size_cap: int = DEFAULT_SIZE_CAP,
    tol: float = DEFAULT_TOL,
) -> FieldCtx:
    """Construct F_{p^n} with deterministic generator and modulus choices."""
    return FieldCtx(p, n, size_cap, tol)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, n) with q = p^n, or raise FieldError."""
    if q < 2:
        raise FieldError(f"q = {q} is not a prime power")
    for p in prime_factors(q):
        n = 0
        m = q
        while m % p == 0:
            m //= p
            n += 1
        if m == 1:
            return p, n
        break
    raise FieldError(f"q = {q} is not a prime power")
