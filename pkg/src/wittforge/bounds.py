"""Exact evaluators for the essential-dimension and Pfister-number bounds.

Every value is an int or a Fraction. The only irrational quantities (the
positive root r_+ of the quadratic inequality, and 2^{(n+4)/4} when
n = 2 mod 4) are returned as :class:`RealWitness` intervals with rational
endpoints, certified by sign checks on exact integer polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import DomainError

DEFAULT_TOLERANCE = Fraction(1, 10**9)

ROST_TABLE = {3: 0, 4: 0, 5: 0, 6: 0, 7: 4, 8: 5, 9: 5, 10: 4, 11: 5, 12: 6, 13: 6, 14: 7}


@dataclass(frozen=True)
class RealWitness:
    """A closed interval [lo, hi] with rational endpoints enclosing a real number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def ceil(self) -> int:
        c = math.ceil(self.lo)
        if math.ceil(self.hi) != c:
            raise ValueError(f"ceiling not determined by [{self.lo}, {self.hi}]")
        return c

    def floor(self) -> int:
        f = math.floor(self.hi)
        if math.floor(self.lo) != f:
            raise ValueError(f"floor not determined by [{self.lo}, {self.hi}]")
        return f

    def __str__(self):
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


@dataclass(frozen=True)
class BoundReport:
    name: str
    n: int
    value: int | Fraction | RealWitness
    vacuous: bool
    validity_note: str
    details: dict = field(default_factory=dict)

    def value_str(self) -> str:
        return str(self.value)

    def as_record(self) -> dict:
        value = self.value
        if isinstance(value, RealWitness):
            value = {"lo": str(value.lo), "hi": str(value.hi)}
        else:
            value = str(value)
        rec = {
            "name": self.name,
            "n": self.n,
            "value": value,
            "vacuous": self.vacuous,
            "validity": self.validity_note,
        }
        if self.details:
            rec["details"] = {k: str(v) for k, v in self.details.items()}
        return rec


def _require(cond: bool, message: str, allow: bool):
    if not cond and not allow:
        raise DomainError(message)


def _range_note(ok: bool, note: str) -> str:
    return note if ok else f"OUTSIDE stated range ({note})"


def dim_spin(n: int) -> int:
    return n * (n - 1) // 2


def rep_dimension(n: int) -> int:
    """Dimension of the generically free representation used for the upper bound."""
    if n % 2:
        return 2 ** ((n - 1) // 2)
    if n % 4 == 2:
        return 2 ** ((n - 2) // 2)
    return 2 ** ((n - 2) // 2) + n


def _congruence(n: int) -> str:
    if n % 2:
        return "n odd"
    return "n = 2 mod 4" if n % 4 == 2 else "n = 0 mod 4"


def spin_lower(n: int) -> BoundReport:
    """Lower bound for ed(Spin_n; 2) coming from the subgroup G_n."""
    if n < 3:
        raise DomainError(f"spin_lower needs n >= 3, got {n}")
    if n % 2:
        value = 2 ** ((n - 1) // 2) - dim_spin(n)
    elif n % 4 == 2:
        value = 2 ** ((n - 2) // 2) - dim_spin(n)
    else:
        value = 2 ** ((n - 2) // 2) - dim_spin(n) + 1
    return BoundReport("spin_lower", n, value, value <= 0, f"{_congruence(n)}; vacuous for n <= 14")


def spin_upper(n: int, allow_out_of_range: bool = False) -> BoundReport:
    """Upper bound for ed(Spin_n) (char 0): rep dimension minus dim Spin_n."""
    ok = n >= 15
    _require(ok, f"spin_upper is stated for n >= 15, got {n}", allow_out_of_range)
    rep = rep_dimension(n)
    value = rep - dim_spin(n)
    return BoundReport(
        "spin_upper",
        n,
        value,
        value <= 0,
        _range_note(ok, f"{_congruence(n)}; char 0; n >= 15"),
        {"rep_dimension": rep, "dim_spin": dim_spin(n)},
    )


def two_adic_part(n: int) -> int:
    """Largest power of 2 dividing n."""
    return n & -n


def merkurjev_lower(n: int) -> BoundReport:
    if n <= 0 or n % 4:
        raise DomainError(f"merkurjev_lower needs n divisible by 4, got {n}")
    value = 2 ** ((n - 2) // 2) - dim_spin(n) + two_adic_part(n)
    return BoundReport(
        "merkurjev_lower", n, value, value <= 0, "n = 0 mod 4", {"two_adic_part": two_adic_part(n)}
    )


def chernousov_serre_lower(n: int) -> BoundReport:
    if n >= 7 and n % 8 in (0, 1, 7):
        value = n // 2 + 1
        note = "n >= 7, n = 0, 1 or -1 mod 8"
    elif n >= 11:
        value = n // 2
        note = "n >= 11, other residues mod 8"
    else:
        raise DomainError(f"no Chernousov-Serre bound stated for n = {n}")
    return BoundReport("chernousov_serre_lower", n, value, value <= 0, note)


def rost_table(n: int) -> int:
    """Exact ed(Spin_n) for 3 <= n <= 14."""
    try:
        return ROST_TABLE[n]
    except KeyError:
        raise DomainError(f"Rost's table covers 3 <= n <= 14, got {n}") from None


def hspin_value(n: int, allow_out_of_range: bool = False) -> BoundReport:
    if n % 4:
        raise DomainError(f"HSpin_n needs n divisible by 4, got {n}")
    ok = n >= 20
    _require(ok, f"hspin_value is stated for n >= 20, got {n}", allow_out_of_range)
    value = 2 ** ((n - 2) // 2) - dim_spin(n)
    return BoundReport("hspin", n, value, value <= 0, _range_note(ok, "n = 0 mod 4, n >= 20, char 0"))


def best_spin_lower(n: int) -> BoundReport:
    return merkurjev_lower(n) if n % 4 == 0 else spin_lower(n)


def tn_interval(n: int, allow_out_of_range: bool = False) -> tuple[BoundReport, BoundReport]:
    """[ed Spin_n - 1, ed Spin_n] for the functor of I^3 forms of dimension n,
    instantiated with the best available bounds on ed Spin_n."""
    low = best_spin_lower(n)
    high = spin_upper(n, allow_out_of_range)
    lower = BoundReport(
        "tn_lower", n, low.value - 1, low.value - 1 <= 0, f"{low.name} - 1; {high.validity_note}"
    )
    upper = BoundReport("tn_upper", n, high.value, high.vacuous, f"spin_upper; {high.validity_note}")
    return lower, upper


def grassmannian_penalty(s: int, n: int) -> int:
    """Dimension s(s + 2n - 1)/2 of the Grassmannian of totally isotropic
    s-planes in an (n + 2s)-dimensional form."""
    if s < 0 or n < 0:
        raise DomainError("grassmannian_penalty needs s, n >= 0")
    return s * (s + 2 * n - 1) // 2


# ---------------------------------------------------------------------------
# Pfister-number lower bound and the quadratic inequality


def _sqrt_enclosure(m: int, tol: Fraction) -> RealWitness:
    """[a, b] containing sqrt(m), from integer square roots of m * 4^k."""
    k = 0
    while True:
        s = math.isqrt(m << (2 * k))
        if s * s == m << (2 * k):
            v = Fraction(s, 1 << k)
            return RealWitness(v, v)
        w = RealWitness(Fraction(s, 1 << k), Fraction(s + 1, 1 << k))
        if w.width < tol:
            return w
        k += 8


def _check_even_n(n: int, minimum: int):
    if n % 2 or n < minimum:
        raise DomainError(f"needs an even n >= {minimum}, got {n}")


def pfister3_lower_bound(n: int, tol: Fraction = DEFAULT_TOLERANCE) -> BoundReport:
    """(2^{(n+4)/4} - n - 2)/7, exact when 4 | n, otherwise enclosed."""
    _check_even_n(n, 2)
    # vacuous iff 2^{(n+4)/4} <= n + 2, decided on squares
    vacuous = 2 ** ((n + 4) // 2) <= (n + 2) ** 2
    if n % 4 == 0:
        value: Fraction | RealWitness = Fraction(2 ** ((n + 4) // 4) - n - 2, 7)
        least = math.ceil(value)
    else:
        t = tol
        while True:
            root = _sqrt_enclosure(2 ** ((n + 4) // 2), t * 7)
            value = RealWitness((root.lo - n - 2) / 7, (root.hi - n - 2) / 7)
            if math.ceil(value.lo) == math.ceil(value.hi):
                break
            t /= 2**16
        least = value.ceil()
    return BoundReport(
        "pfister3_lower",
        n,
        value,
        vacuous,
        "n even; vacuous for n <= 10",
        {"least_integer": max(least, 0)},
    )


PARITIES = ("even", "odd")


def quadratic_coefficients(n: int, parity: str) -> tuple[int, int, int]:
    """(A, B, C) with A r^2 + B r + C >= 0 equivalent to the lower-bound chain
    after substituting s = (7r - n)/2 (even r) or s = (7r + 1 - n)/2 (odd r),
    scaled by 8.

    Even: 49 r^2 + (14n + 10) r - 2^{(n+4)/2} + n^2 - 2n + 8.
    Odd:  49 r^2 + (14n + 24) r - 2^{(n+4)/2} + n^2 + 7.
    """
    if parity not in PARITIES:
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    _check_even_n(n, 2)
    p = 2 ** ((n + 4) // 2)
    if parity == "even":
        return 49, 14 * n + 10, -p + n * n - 2 * n + 8
    return 49, 14 * n + 24, -p + n * n + 7


def lower_bound_chain(n: int, r: int, parity: str) -> Fraction:
    """3r - (2^{(n-2)/2} - n(n-1)/2 - 1 - s(s + 2n - 1)/2) evaluated directly,
    with s fixed by the dimension count. Nonnegative iff the chain holds."""
    s2 = 7 * r - n if parity == "even" else 7 * r + 1 - n
    s = Fraction(s2, 2)
    return 3 * r - (2 ** ((n - 2) // 2) - Fraction(n * (n - 1), 2) - 1 - s * (s + 2 * n - 1) / 2)


def _poly(n: int, parity: str, r) -> int | Fraction:
    a, b, c = quadratic_coefficients(n, parity)
    return a * r * r + b * r + c


def quadratic_check(n: int, r: int, parity: str) -> bool:
    """Whether r satisfies the quadratic inequality for this n and parity of r."""
    _check_even_n(n, 12)
    if r < 0:
        raise DomainError("r must be nonnegative")
    return _poly(n, parity, r) >= 0


def _radical(n: int, parity: str) -> tuple[int, int]:
    # r_+ = (sqrt(D) - L) / 49
    p = 2 ** ((n + 4) // 2)
    if parity == "even":
        return 49 * p + 168 * n - 367, 7 * n + 5
    return 49 * p + 168 * n - 199, 7 * n + 12


def r_plus_radical(n: int, parity: str, tol: Fraction = DEFAULT_TOLERANCE) -> RealWitness:
    """Enclosure of the closed-form positive root, from integer square roots."""
    if parity not in PARITIES:
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    d, lead = _radical(n, parity)
    root = _sqrt_enclosure(d, tol * 49)
    return RealWitness((root.lo - lead) / 49, (root.hi - lead) / 49)


def r_plus(n: int, parity: str, tol: Fraction = DEFAULT_TOLERANCE) -> RealWitness:
    """Positive root of the quadratic, by bisection on the exact polynomial.

    Starts from the closed-form enclosure, certifies the sign change of the
    polynomial across it, and refines until the width is below ``tol``.
    Also checks that the root is at least the Pfister-number lower bound.
    """
    _check_even_n(n, 12)
    start = r_plus_radical(n, parity, Fraction(1, 49))
    lo, hi = start.lo, start.hi
    if _poly(n, parity, lo) > 0 or _poly(n, parity, hi) < 0:
        raise AssertionError(f"closed-form root does not bracket the polynomial root (n={n})")
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        if _poly(n, parity, mid) < 0:
            lo = mid
        else:
            hi = mid
    witness = RealWitness(lo, hi)
    bound = pfister3_lower_bound(n, tol).value
    bound_hi = bound.hi if isinstance(bound, RealWitness) else bound
    if witness.lo < bound_hi:
        raise AssertionError(f"r_+ enclosure {witness} below the Pfister lower bound {bound} (n={n})")
    return witness


def spin_bounds(n: int) -> dict[str, BoundReport]:
    """Every bound on ed(Spin_n) that applies at this n."""
    out = {}
    if n >= 3:
        out["spin_lower"] = spin_lower(n)
    if n >= 15:
        out["spin_upper"] = spin_upper(n)
    if n % 4 == 0 and n >= 4:
        out["merkurjev_lower"] = merkurjev_lower(n)
    if (n >= 7 and n % 8 in (0, 1, 7)) or n >= 11:
        out["chernousov_serre_lower"] = chernousov_serre_lower(n)
    if n in ROST_TABLE:
        out["rost"] = BoundReport("rost", n, rost_table(n), False, "exact, 3 <= n <= 14")
    if n % 4 == 0 and n >= 20:
        out["hspin"] = hspin_value(n)
    return out


__all__ = [
    "BoundReport",
    "RealWitness",
    "spin_lower",
    "spin_upper",
    "merkurjev_lower",
    "chernousov_serre_lower",
    "rost_table",
    "hspin_value",
    "tn_interval",
    "grassmannian_penalty",
    "pfister3_lower_bound",
    "quadratic_coefficients",
    "quadratic_check",
    "r_plus",
    "r_plus_radical",
    "spin_bounds",
]
