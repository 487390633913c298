"""
Small finite fields F_q (q a prime power) with table arithmetic, plus rank
and row reduction over them.  Elements are ints in ``range(q)``; the prime
subfield is ``range(p)`` with its usual arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

__all__ = ["FiniteField", "rank", "rref"]


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            r, m = 0, q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, r
    raise ValueError(f"{q} is not a prime power")


class FiniteField:
    """
    The field with ``q`` elements.

    For ``q = p^r`` with ``r > 1`` an element ``a`` encodes the polynomial whose
    base-``p`` digits are its coefficients, modulo a fixed irreducible of degree ``r``.

    >>> F = FiniteField(4)
    >>> F.mul(2, 2), F.mul(2, 3), F.inv(2)
    (3, 1, 3)
    """

    def __init__(self, q: int):
        if q < 2:
            raise ValueError("field size must be at least 2")
        self.q = q
        self.p, self.r = _factor_prime_power(q)
        if self.r == 1:
            self._add = self._mul = None
        else:
            self._build_tables()
        self._inv = [0] + [self._find_inv(a) for a in range(1, q)]

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.r)]

    def _from_digits(self, d: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(d))

    def _build_tables(self) -> None:
        p, r = self.p, self.r
        if r > 3:
            raise ValueError("only extensions of degree 2 or 3 are supported")
        # in degree <= 3, having no root in F_p means irreducible
        self.modulus = next(
            cand
            for cand in (list(tail) + [1] for tail in product(range(p), repeat=r))
            if not any(sum(c * x**i for i, c in enumerate(cand)) % p == 0 for x in range(p))
        )
        q = self.q
        self._add = [[self._from_digits([x + y for x, y in zip(self._digits(a), self._digits(b))]) for b in range(q)] for a in range(q)]
        self._mul = [[self._polymul(a, b) for b in range(q)] for a in range(q)]

    def _polymul(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % p
            if c:
                for i, m in enumerate(self.modulus):
                    prod[k - r + i] -= c * m
        return self._from_digits(prod[:r])

    def _find_inv(self, a: int) -> int:
        if self.r == 1:
            return pow(a, -1, self.p)
        return next(b for b in range(1, self.q) if self._mul[a][b] == 1)

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.r == 1 else self._add[a][b]

    def neg(self, a: int) -> int:
        if self.r == 1:
            return -a % self.p
        return self._from_digits([-d for d in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p if self.r == 1 else self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def embed(self, c: int) -> int:
        """Image of an integer in the prime subfield."""
        return c % self.p

    def evaluate(self, terms, point: Sequence[int]) -> int:
        """Evaluate ``{exponent tuple: integer coefficient}`` at ``point``."""
        total = 0
        for e, c in terms.items():
            if isinstance(c, Fraction):
                c = c.numerator * pow(c.denominator, -1, self.p)
            t = self.embed(int(c))
            if not t:
                continue
            for x, a in zip(point, e):
                for _ in range(a):
                    t = self.mul(t, x)
            total = self.add(total, t)
        return total


def rref(F: FiniteField, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(r) for r in rows]
    pivots: list[int] = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(F, rows)[1])
