"""Exact scalar fields: the rationals (Fraction entries in object arrays)
and prime fields GF(p) (int64 arrays reduced mod p)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import UnsupportedFieldError, ValidationError


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Rationals:
    characteristic = 0
    name = "q"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def scalar(self, x):
        if isinstance(x, tuple):
            return Fraction(int(x[0]), int(x[1]))
        return Fraction(x)

    def array(self, data):
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self.scalar(x)
        return a

    def zeros(self, shape):
        return self.array(np.zeros(shape, dtype=np.int64))

    def eye(self, n):
        return self.array(np.eye(n, dtype=np.int64))

    def reduce(self, a):
        return a

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def matmul(self, a, b):
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return a @ b

    def pair(self, x):
        x = Fraction(x)
        return [x.numerator, x.denominator]

    def root_of_unity(self, m):
        if m == 1:
            return Fraction(1)
        if m == 2:
            return Fraction(-1)
        raise UnsupportedFieldError(f"the rationals contain no primitive root of unity of order {m}")


class PrimeField:
    name = "gf"

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if p >= 2**31:
            raise UnsupportedFieldError("prime fields are limited to p < 2^31")
        self.p = p
        self.characteristic = p
        # entries stay < p, so int64 products are safe only for small p
        self.dtype = np.int64 if p < 2**20 else object

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def scalar(self, x):
        if isinstance(x, tuple):
            x = Fraction(int(x[0]), int(x[1]))
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValidationError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def array(self, data):
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self.scalar(x)
        return a.astype(self.dtype)

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n):
        return np.eye(n, dtype=self.dtype)

    def reduce(self, a):
        return a % self.p

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def matmul(self, a, b):
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        if self.dtype is np.int64 and a.shape[1] * (self.p - 1) ** 2 >= 2**62:
            return (a.astype(object) @ b.astype(object) % self.p).astype(np.int64)
        return (a @ b) % self.p

    def pair(self, x):
        return [int(x), 1]

    def generator(self):
        """A generator of the multiplicative group."""
        p = self.p
        if p == 2:
            return 1
        n, factors, q = p - 1, set(), 2
        while q * q <= n:
            while n % q == 0:
                factors.add(q)
                n //= q
            q += 1
        if n > 1:
            factors.add(n)
        for g in range(2, p):
            if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
                return g
        raise AssertionError("no generator found")

    def root_of_unity(self, m):
        if (self.p - 1) % m:
            raise UnsupportedFieldError(f"GF({self.p}) contains no primitive root of unity of order {m}")
        return pow(self.generator(), (self.p - 1) // m, self.p)


def parse_field(text):
    """'q' or 'gf:p'."""
    text = str(text).strip().lower()
    if text == "q":
        return Rationals()
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValidationError(f"bad prime in field spec {text!r}") from None
        return PrimeField(p)
    raise ValidationError(f"unknown field {text!r}; use q or gf:p")


def field_name(F):
    return "q" if F.characteristic == 0 else f"gf:{F.p}"
