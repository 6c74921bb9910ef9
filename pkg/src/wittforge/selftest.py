"""Reduced-scale invariant suites, runnable from the CLI.

The seed comes from ``WITTFORGE_SEED`` (default 0) so failures reproduce.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import bounds, clifford
from .fields import GF, hilbert_symbol, relevant_places, squarefree_part
from .forms import DiagonalForm, invariants
from .pfister import (
    PfisterSlots,
    assemble_phi,
    decompose_I1,
    decompose_I2,
    witt_sum,
)
from .witt import ideal_membership, is_hyperbolic, witt_equivalent


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def seed_from_env() -> int:
    return int(os.environ.get("WITTFORGE_SEED", "0"))


def random_rational(rng: random.Random, height: int = 50) -> Fraction:
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, height), rng.randint(1, height))


def random_form(rng: random.Random, dim: int, height: int = 50) -> DiagonalForm:
    return DiagonalForm.of([random_rational(rng, height) for _ in range(dim)])


@lru_cache(maxsize=None)
def _classes_of_height(height: int) -> dict[int, list[Fraction]]:
    # signed squarefree class -> every rational of height <= height in it
    out: dict[int, list[Fraction]] = {}
    for num in range(1, height + 1):
        for den in range(1, height + 1):
            if math.gcd(num, den) == 1:
                for x in (Fraction(num, den), Fraction(-num, den)):
                    out.setdefault(squarefree_part(x.numerator * x.denominator), []).append(x)
    return out


def random_I2_form(rng: random.Random, dim: int, height: int = 50) -> DiagonalForm:
    """Random form of even dimension with trivial signed discriminant and all
    coefficients of height <= ``height``.

    The first dim - 1 entries are drawn freely and redrawn until the class
    forced on the last entry has a representative of small height.
    """
    classes = _classes_of_height(height)
    while True:
        head = [random_rational(rng, height) for _ in range(dim - 1)]
        prod = Fraction((-1) ** (dim * (dim - 1) // 2))
        for a in head:
            prod *= a
        reps = classes.get(squarefree_part(prod.numerator * prod.denominator))
        if reps:
            return DiagonalForm.of(head + [rng.choice(reps)])


def check_product_formula(rng, trials) -> CheckResult:
    for _ in range(trials):
        a, b = random_rational(rng), random_rational(rng)
        prod = 1
        for v in relevant_places(a, b):
            prod *= hilbert_symbol(a, b, v)
        if prod != 1:
            return CheckResult("hilbert product formula", False, f"a={a}, b={b}")
    return CheckResult("hilbert product formula", True, f"{trials} pairs")


def check_decompositions(rng, trials) -> CheckResult:
    for _ in range(trials):
        n = rng.choice((2, 4, 6, 8, 10))
        q = random_form(rng, n)
        t1 = decompose_I1(q)
        if len(t1) > n or not witt_equivalent(witt_sum(t1), q):
            return CheckResult("I^1/I^2 decompositions", False, f"I1 on {q}")
        q2 = random_I2_form(rng, n)
        t2 = decompose_I2(q2)
        if len(t2) > n - 2 or not witt_equivalent(witt_sum(t2), q2):
            return CheckResult("I^1/I^2 decompositions", False, f"I2 on {q2}")
    return CheckResult("I^1/I^2 decompositions", True, f"{trials} forms")


def random_phi_triples(rng: random.Random, r: int, height: int = 20) -> list[PfisterSlots]:
    """r random 3-fold Pfister forms with alternating signs +, -, +, ..."""
    return [
        PfisterSlots(tuple(random_rational(rng, height) for _ in range(3)), 1 if i % 2 == 0 else -1)
        for i in range(r)
    ]


def check_phi(rng, trials) -> CheckResult:
    for _ in range(trials):
        r = rng.randint(1, 6)
        triples = random_phi_triples(rng, r)
        phi = assemble_phi(triples)
        if phi.dim != (7 * r if r % 2 == 0 else 7 * r + 1) or not ideal_membership(phi, 3):
            return CheckResult("phi in I^3", False, ", ".join(map(str, triples)))
        if not witt_equivalent(phi, witt_sum(triples)):
            return CheckResult("phi in I^3", False, "phi not equivalent to its Pfister sum")
    return CheckResult("phi in I^3", True, f"{trials} assemblies")


def check_invariance(rng, trials) -> CheckResult:
    for _ in range(trials):
        q = random_form(rng, rng.randint(1, 7))
        coeffs = list(q.coefficients)
        rng.shuffle(coeffs)
        i = rng.randrange(len(coeffs))
        coeffs[i] = coeffs[i] * random_rational(rng, 9) ** 2
        if invariants(DiagonalForm.of(coeffs)) != invariants(q):
            return CheckResult("invariants under permutation/squares", False, str(q))
    return CheckResult("invariants under permutation/squares", True, f"{trials} forms")


def check_finite_fields(rng, trials) -> CheckResult:
    for p in (3, 5, 7):
        F = GF(p)
        reps = F.square_class_reps()
        for _ in range(trials):
            dim = 2 * rng.randint(0, 3)
            q = DiagonalForm.of([rng.choice(reps) for _ in range(dim)], F)
            if ideal_membership(q, 2) and not is_hyperbolic(q):
                return CheckResult("I^2(F_p) = 0", False, f"{q} over F{p}")
    return CheckResult("I^2(F_p) = 0", True, f"p in 3, 5, 7; {trials} forms each")


def check_clifford(rng, trials) -> CheckResult:
    for n in range(2, 9):
        g = clifford.enumerate_group(n)
        for _ in range(trials):
            x, y = (clifford._unpack(rng.choice(g), n) for _ in range(2))
            if clifford.commutator(x, y).sign != clifford.pair_commutator(x, y):
                return CheckResult("clifford commutator law", False, f"{x}, {y}")
        s = clifford.group_summary(n)
        if s.ed_value != clifford.ed_closed_form(n):
            return CheckResult("clifford commutator law", False, f"ed mismatch n={n}")
    return CheckResult("clifford commutator law", True, "n = 2..8")


def check_bounds(rng, trials) -> CheckResult:
    for n in range(12, 33, 2):
        for parity in bounds.PARITIES:
            w = bounds.r_plus(n, parity)
            if not bounds.quadratic_check(n, w.ceil(), parity):
                return CheckResult("r_+ bracketing", False, f"n={n} {parity}")
    return CheckResult("r_+ bracketing", True, "even n in 12..32")


CHECKS: list[Callable] = [
    check_product_formula,
    check_invariance,
    check_decompositions,
    check_phi,
    check_finite_fields,
    check_clifford,
    check_bounds,
]


def run_selftest(seed: int | None = None, trials: int = 40) -> list[CheckResult]:
    rng = random.Random(seed_from_env() if seed is None else seed)
    return [check(rng, trials) for check in CHECKS]
