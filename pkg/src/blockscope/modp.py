"""Reduction of cyclotomic integers modulo a maximal ideal above p.

For a conductor m = p^a * m' (p not dividing m'), the residue field is
GF(p^f) with f the multiplicative order of p mod m'.  The ideal is pinned
by the lexicographically least irreducible factor g of Phi_{m'} over
GF(p): the field is realized as GF(p)[y]/(g) and zeta_m maps to the class
of y (so the p-power part of zeta collapses to 1).  Block partitions do
not depend on the factor choice; the test suite re-runs one group under a
second factor and asserts identical partitions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Cyclo
from .errors import InternalInconsistency, NotPIntegral

__all__ = ["GFq", "ModPContext", "mod_p_context"]


class GFq:
    """GF(p^f) as GF(p)[y]/(modulus); elements are coefficient tuples."""

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p = p
        self.modulus = tuple(c % p for c in modulus)
        assert self.modulus[-1] == 1, "modulus must be monic"
        self.f = len(modulus) - 1
        self.size = p**self.f
        self.zero = (0,) * self.f
        self.one = tuple([1] + [0] * (self.f - 1)) if self.f else ()
        # reduction rows for y^f .. y^(2f-2)
        self._red = []
        top = tuple((-c) % p for c in self.modulus[:-1])
        cur = top
        self._red.append(cur)
        for _ in range(self.f - 2):
            cur = self._shift_reduce(cur, top)
            self._red.append(cur)

    def _shift_reduce(self, vec, top):
        carry = vec[-1]
        shifted = (0,) + vec[:-1]
        return tuple((s + carry * t) % self.p for s, t in zip(shifted, top))

    def scalar(self, c: int) -> tuple:
        out = [0] * self.f
        out[0] = c % self.p
        return tuple(out)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        f, p = self.f, self.p
        conv = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = [c % p for c in conv[:f]]
        for k in range(f, 2 * f - 1):
            c = conv[k] % p
            if c:
                row = self._red[k - f]
                for i in range(f):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def pow(self, a, n: int):
        n %= (self.size - 1) if any(a) else 1
        r = self.one
        q = a
        while n:
            if n & 1:
                r = self.mul(r, q)
            q = self.mul(q, q)
            n >>= 1
        return r

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in GFq")
        return self.pow(a, self.size - 2)

    def element_order(self, a) -> int:
        if not any(a):
            raise ValueError("zero has no multiplicative order")
        n = self.size - 1
        order = n
        for q in _prime_factors(n):
            while order % q == 0 and self.pow(a, order // q) == self.one:
                order //= q
        return order

    def elements(self):
        def rec(i):
            if i == self.f:
                yield ()
                return
            for rest in rec(i + 1):
                for c in range(self.p):
                    yield (c,) + rest
        return rec(0)


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _mult_order(p: int, m: int) -> int:
    if m == 1:
        return 1
    o, v = 1, p % m
    while v != 1:
        v = (v * p) % m
        o += 1
    return o


@lru_cache(maxsize=None)
def _phi_factors_mod_p(mprime: int, p: int) -> tuple:
    """All monic irreducible factors of Phi_{m'} over GF(p), sorted.

    Factors are coefficient tuples (ascending degree) over 0..p-1, sorted
    lexicographically; this order pins the maximal-ideal choice.
    """
    if mprime == 1:
        return (((-1) % p, 1),)
    f = _mult_order(p, mprime)
    # bootstrap field: any irreducible polynomial of degree f
    boot = _find_irreducible(p, f)
    K = GFq(p, boot)
    gen = _find_generator(K)
    zeta = K.pow(gen, (K.size - 1) // mprime)
    assert K.element_order(zeta) == mprime
    # Frobenius orbits on primitive residues give the irreducible factors
    prim = [j for j in range(1, mprime) if math.gcd(j, mprime) == 1]
    seen = set()
    factors = []
    for j in prim:
        if j in seen:
            continue
        orbit = []
        k = j
        while k not in orbit:
            orbit.append(k)
            seen.add(k)
            k = (k * p) % mprime
        # min poly = prod (y - zeta^k) over the orbit, computed in K
        poly = [K.one]
        for k in orbit:
            root = K.pow(zeta, k)
            new = [K.zero] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] = K.add(new[i + 1], c)
                new[i] = K.sub(new[i], K.mul(c, root))
            poly = new
        coeffs = []
        for c in poly:
            assert all(x == 0 for x in c[1:]), "factor not over the prime field"
            coeffs.append(c[0])
        factors.append(tuple(coeffs))
    factors.sort()
    return tuple(factors)


def _find_irreducible(p: int, f: int) -> tuple:
    if f == 1:
        return (0, 1)
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        poly = tuple(coeffs) + (1,)
        if _is_irreducible(p, poly):
            return poly
    raise InternalInconsistency("no irreducible polynomial found")  # pragma: no cover


def _is_irreducible(p: int, poly: tuple) -> bool:
    f = len(poly) - 1
    # x^(p^f) = x mod poly, and x^(p^(f/q)) != x for prime q | f
    if _polpow_x(p, poly, p**f) != (0, 1):
        return False
    for q in _prime_factors(f):
        if _polpow_x(p, poly, p**(f // q)) == (0, 1):
            return False
    return True


def _polpow_x(p: int, modulus: tuple, n: int) -> tuple:
    """x^n mod modulus over GF(p), returned trimmed."""
    f = len(modulus) - 1

    def mul(a, b):
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] = (conv[i + j] + x * y) % p
        # reduce
        for k in range(len(conv) - 1, f - 1, -1):
            c = conv[k]
            if c:
                conv[k] = 0
                for i in range(f + 1):
                    conv[k - f + i] = (conv[k - f + i] - c * modulus[i]) % p
        out = conv[:f]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    result = (1,)
    base = (0, 1) if f > 1 else ((-modulus[0]) % p,)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def _find_generator(K: GFq) -> tuple:
    n = K.size - 1
    primes = _prime_factors(n)
    for a in K.elements():
        if not any(a):
            continue
        if all(K.pow(a, n // q) != K.one for q in primes):
            return a
    raise InternalInconsistency("no multiplicative generator found")  # pragma: no cover


class ModPContext:
    """Ring homomorphism from p-integral cyclotomics of conductor | m to GF(p^f)."""

    def __init__(self, m: int, p: int, factor_index: int = 0):
        self.p = p
        self.m = m
        mprime = m
        while mprime % p == 0:
            mprime //= p
        self.m_prime = mprime
        self.factors = _phi_factors_mod_p(mprime, p)
        if not 0 <= factor_index < len(self.factors):
            raise ValueError(f"factor index {factor_index} out of range")
        self.factor_index = factor_index
        self.field = GFq(p, self.factors[factor_index])
        if mprime == 1:
            self.zeta_image = self.field.one
        elif self.field.f == 1:
            # linear factor y - root: the class of y is the root itself
            self.zeta_image = ((-self.field.modulus[0]) % p,)
            assert self.field.element_order(self.zeta_image) == mprime
        else:
            self.zeta_image = tuple([0, 1] + [0] * (self.field.f - 2))
            assert self.field.element_order(self.zeta_image) == mprime
        # image of zeta_m^k depends only on k mod m'
        table = []
        cur = self.field.one
        for _ in range(max(1, mprime)):
            table.append(cur)
            cur = self.field.mul(cur, self.zeta_image)
        self._zpow = table

    def reduce_rational(self, q: Fraction) -> tuple:
        if q.denominator % self.p == 0:
            raise NotPIntegral(f"denominator of {q} is divisible by {self.p}")
        num = q.numerator % self.p
        den = pow(q.denominator % self.p, -1, self.p)
        return self.field.scalar(num * den)

    def reduce(self, x) -> tuple:
        """Image of a p-integral cyclotomic value in the residue field."""
        if isinstance(x, (int, Fraction)):
            x = Cyclo.rational(x)
        if self.m % x.m != 0:
            raise ValueError(f"conductor {x.m} does not divide context conductor {self.m}")
        step = self.m // x.m
        out = self.field.zero
        for k, c in enumerate(x.coeffs):
            if c == 0:
                continue
            img = self._zpow[(k * step) % max(1, self.m_prime)]
            out = self.field.add(out, self.field.mul(self.reduce_rational(c), img))
        return out

    def __repr__(self):
        return (f"ModPContext(m={self.m}, p={self.p}, "
                f"field=GF({self.p}^{self.field.f}), factor={self.factor_index})")


@lru_cache(maxsize=None)
def mod_p_context(m: int, p: int, factor_index: int = 0) -> ModPContext:
    return ModPContext(m, p, factor_index)
