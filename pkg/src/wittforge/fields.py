"""Exact arithmetic over Q and odd prime fields, square classes, Legendre and
Hilbert symbols.

Rationals are carried as :class:`fractions.Fraction`, residues mod p as plain
ints in ``range(p)``. Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``|n|`` by trial division, as ``((p, e), ...)``."""
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel of a nonzero integer."""
    if n == 0:
        raise DomainError("zero has no square class")
    sf = 1
    for p, e in factorize(n):
        if e % 2:
            sf *= p
    return sf if n > 0 else -sf


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre_symbol(a: int, p: int) -> int:
    """(a | p) for an odd prime p not dividing a, via Euler's criterion."""
    if p % 2 == 0 or not is_prime(p):
        raise DomainError(f"legendre_symbol needs an odd prime, got {p}")
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def least_nonresidue(p: int) -> int:
    a = 2
    while legendre_symbol(a, p) == 1:
        a += 1
    return a


@dataclass(frozen=True)
class BaseField:
    """Either Q (``p is None``) or the prime field F_p with p odd."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p % 2 == 0 or not is_prime(self.p)):
            raise DomainError(f"F_p requires an odd prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __call__(self, value) -> FieldElem:
        return FieldElem.of(value, self)

    def parse(self, text: str) -> FieldElem:
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact number: {text!r}") from exc
        return FieldElem.of(value, self)

    def square_class_reps(self) -> tuple[FieldElem, ...]:
        """Representatives of K*/K*^2 (only meaningful for finite fields)."""
        if self.is_rational:
            raise DomainError("Q has infinitely many square classes")
        return (self(1), self(least_nonresidue(self.p)))

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"


QQ = BaseField()


def GF(p: int) -> BaseField:
    return BaseField(p)


Number = Union[int, Fraction, "FieldElem"]


@dataclass(frozen=True)
class FieldElem:
    value: Fraction | int
    field: BaseField = QQ

    @classmethod
    def of(cls, value, field: BaseField = QQ) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != field:
                raise DomainError(f"element of {value.field} used in {field}")
            return value
        if field.is_rational:
            return cls(Fraction(value), field)
        q = Fraction(value)
        if q.denominator % field.p == 0:
            raise DomainError(f"{value} has no image in {field}")
        return cls(q.numerator * pow(q.denominator, -1, field.p) % field.p, field)

    def _coerce(self, other) -> FieldElem:
        other = FieldElem.of(other, self.field)
        return other

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other):
        o = self._coerce(other)
        return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._wrap(-self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        if self.is_zero():
            raise DomainError("division by zero")
        if self.field.is_rational:
            return self._wrap(1 / self.value)
        return self._wrap(pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.is_rational:
            return self._wrap(self.value**k)
        return self._wrap(pow(self.value, k, self.field.p))

    def _wrap(self, value) -> FieldElem:
        if self.field.is_rational:
            return FieldElem(Fraction(value), self.field)
        return FieldElem(value % self.field.p, self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        try:
            return self == FieldElem.of(other, self.field)
        except (DomainError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FieldElem({self.value}, {self.field})"


def square_class(a: FieldElem) -> FieldElem:
    """Canonical representative of ``a`` modulo nonzero squares.

    Over Q this is the signed squarefree integer; over F_p it is 1 or the
    least positive nonresidue.
    """
    if a.is_zero():
        raise DomainError("zero has no square class")
    if a.field.is_rational:
        q = a.value
        return FieldElem(Fraction(squarefree_part(q.numerator * q.denominator)), a.field)
    p = a.field.p
    return FieldElem(1 if legendre_symbol(a.value, p) == 1 else least_nonresidue(p), a.field)


# ---------------------------------------------------------------------------
# Places of Q and Hilbert symbols


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: ``Place(None)`` is the real place, ``Place(p)`` is p-adic."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self):
        return "inf" if self.prime is None else str(self.prime)

    @classmethod
    def parse(cls, text: str) -> Place:
        text = text.strip().lower()
        if text in ("inf", "oo", "real"):
            return REAL
        return cls(int(text))


REAL = Place(None)


def _as_integer_class(a) -> int:
    # a rational is a*den^2 / den^2, so num*den lies in its square class
    if isinstance(a, FieldElem):
        if not a.field.is_rational:
            raise DomainError("Hilbert symbols are only defined here over Q")
        a = a.value
    q = Fraction(a)
    if q == 0:
        raise DomainError("Hilbert symbol of zero")
    return q.numerator * q.denominator


def _hilbert_int(a: int, b: int, p: int | None) -> int:
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    alpha, beta = valuation(a, p), valuation(b, p)
    u, v = a // p**alpha, b // p**beta
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2  # noqa: E731
        omega = lambda x: ((x * x - 1) // 8) % 2  # noqa: E731
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre_symbol(u, p)
    if alpha % 2:
        sign *= legendre_symbol(v, p)
    return sign


def hilbert_symbol(a, b, v: Place) -> int:
    """(a, b)_v for nonzero rationals: +1 iff z^2 = a x^2 + b y^2 is
    nontrivially solvable over the completion of Q at ``v``."""
    return _hilbert_int(_as_integer_class(a), _as_integer_class(b), v.prime)


def relevant_places(*values) -> list[Place]:
    """The real place and every prime dividing 2 or a numerator/denominator.

    At all other places every Hilbert symbol among ``values`` is +1.
    """
    primes = {2}
    for a in values:
        n = _as_integer_class(a)
        primes.update(p for p, _ in factorize(n))
    return [REAL] + [Place(p) for p in sorted(primes)]
