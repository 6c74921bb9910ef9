"""The finite 2-group G_n of signed even products +-e_I in the Clifford algebra
with e_i^2 = -1 and e_i e_j = -e_j e_i.

Elements are a sign and a bitmask (bit i-1 stands for e_i). The brute-force
routines work on a packed int ``mask << 1 | signbit`` for speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .fields import DomainError

MAX_N = 30
BRUTE_FORCE_MAX_N = 14


def _reorder_parity(I: int, J: int) -> int:
    # transpositions to sort the word I.J: pairs (i in I, j in J) with i > j
    t = 0
    while J:
        low = J & -J
        t += bin(I & ~((low << 1) - 1)).count("1")
        J ^= low
    return t & 1


def mask_product_sign(I: int, J: int) -> int:
    """Sign s with e_I e_J = s e_{I xor J}: reordering plus one -1 per shared index."""
    parity = _reorder_parity(I, J) + bin(I & J).count("1")
    return -1 if parity & 1 else 1


@dataclass(frozen=True)
class CliffordElement:
    sign: int
    subset: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise DomainError(f"ambient n must be in 1..{MAX_N}, got {self.n}")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if self.subset < 0 or self.subset >> self.n:
            raise DomainError(f"subset {self.subset:b} does not fit in n = {self.n}")
        if bin(self.subset).count("1") % 2:
            raise DomainError("G_n only contains products of an even number of generators")

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int, sign: int = 1) -> CliffordElement:
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise DomainError(f"index {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(sign, mask, n)

    @classmethod
    def identity(cls, n: int) -> CliffordElement:
        return cls(1, 0, n)

    @property
    def indices(self) -> list[int]:
        return [i + 1 for i in range(self.n) if self.subset >> i & 1]

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        return cliff_mul(self, other)

    def __neg__(self):
        return CliffordElement(-self.sign, self.subset, self.n)

    def inverse(self) -> CliffordElement:
        # e_I e_I = s * 1, so e_I^{-1} = s * e_I
        s = mask_product_sign(self.subset, self.subset)
        return CliffordElement(self.sign * s, self.subset, self.n)

    def __str__(self):
        return ("+" if self.sign == 1 else "-") + "e{" + ",".join(map(str, self.indices)) + "}"

    @classmethod
    def parse(cls, text: str, n: int) -> CliffordElement:
        text = text.strip()
        if len(text) < 3 or text[0] not in "+-" or not text[1:].startswith("e{") or not text.endswith("}"):
            raise DomainError(f"expected an element like '+e{{1,2}}', got {text!r}")
        body = text[3:-1].strip()
        idx = [int(x) for x in body.split(",")] if body else []
        return cls.from_indices(idx, n, 1 if text[0] == "+" else -1)


def _check_ambient(x: CliffordElement, y: CliffordElement):
    if x.n != y.n:
        raise DomainError(f"ambient mismatch: G_{x.n} vs G_{y.n}")


def cliff_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    _check_ambient(x, y)
    s = x.sign * y.sign * mask_product_sign(x.subset, y.subset)
    return CliffordElement(s, x.subset ^ y.subset, x.n)


def pair_commutator(x: CliffordElement, y: CliffordElement) -> int:
    """[e_I, e_J] = (-1)^{|I & J|}; for even |I|, |J| this is the whole story."""
    _check_ambient(x, y)
    return -1 if bin(x.subset & y.subset).count("1") % 2 else 1


def commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """x y x^-1 y^-1 computed by multiplication."""
    return x * y * x.inverse() * y.inverse()


# ---------------------------------------------------------------------------
# Packed representation for enumeration


def _pack(x: CliffordElement) -> int:
    return x.subset << 1 | (x.sign == -1)


def _unpack(c: int, n: int) -> CliffordElement:
    return CliffordElement(-1 if c & 1 else 1, c >> 1, n)


def packed_mul(a: int, b: int) -> int:
    I, J = a >> 1, b >> 1
    neg = (a ^ b ^ _reorder_parity(I, J) ^ bin(I & J).count("1")) & 1
    return (I ^ J) << 1 | neg


def packed_inverse(a: int) -> int:
    I = a >> 1
    return a ^ (mask_product_sign(I, I) == -1)


def enumerate_group(n: int) -> list[int]:
    """All 2^n elements of G_n, packed."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n must be in 1..{MAX_N}")
    return [m << 1 | s for m in range(1 << n) if bin(m).count("1") % 2 == 0 for s in (0, 1)]


def generators(n: int) -> list[int]:
    """-1 together with e_i e_{i+1}; the adjacent pairs span all even subsets."""
    return [1] + [(0b11 << i) << 1 for i in range(n - 1)]


# ---------------------------------------------------------------------------
# Generic finite-group analysis


@dataclass
class FiniteGroup:
    """An explicitly enumerated finite group: elements, product, identity and
    optionally a generating set (all elements if omitted)."""

    elements: Sequence[Hashable]
    mul: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable
    gens: Sequence[Hashable] | None = None
    inv: Callable[[Hashable], Hashable] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverse_table(self) -> dict:
        if self.inv is not None:
            return {x: self.inv(x) for x in self.elements}
        inv = {}
        for x in self.elements:
            if x in inv:
                continue
            for y in self.elements:
                if self.mul(x, y) == self.identity:
                    inv[x], inv[y] = y, x
                    break
        return inv

    def generating_set(self) -> Sequence[Hashable]:
        return self.gens if self.gens is not None else self.elements

    def center(self) -> list:
        g = self.generating_set()
        return [z for z in self.elements if all(self.mul(z, s) == self.mul(s, z) for s in g)]

    def closure(self, seeds: Iterable) -> set:
        out = {self.identity}
        frontier = list(set(seeds) - out)
        out.update(frontier)
        while frontier:
            nxt = []
            for x in frontier:
                for y in list(out):
                    for z in (self.mul(x, y), self.mul(y, x)):
                        if z not in out:
                            out.add(z)
                            nxt.append(z)
            frontier = nxt
        return out

    def commutator_subgroup(self) -> set:
        # <[x, s] : x in G, s in gens> is normal and has abelian quotient
        inv = self.inverse_table()
        comms = {
            self.mul(self.mul(x, s), self.mul(inv[x], inv[s]))
            for x in self.elements
            for s in self.generating_set()
        }
        return self.closure(comms)

    def element_order(self, x) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(x) for x in self.elements))


def _prime_power(n: int) -> tuple[int, int] | None:
    if n == 1:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def abelian_rank(group: FiniteGroup, subgroup: Iterable, p: int) -> int:
    """Minimal number of generators of an abelian p-group: log_p of the size
    of its p-torsion."""
    torsion = 0
    for x in subgroup:
        y = x
        for _ in range(p - 1):
            y = group.mul(y, x)
        if y == group.identity:
            torsion += 1
    r = round(math.log(torsion, p))
    if p**r != torsion:
        raise DomainError("p-torsion size is not a power of p")
    return r


def _is_cyclic(group: FiniteGroup, subgroup: set) -> bool:
    return any(group.element_order(x) == len(subgroup) for x in subgroup)


@dataclass(frozen=True)
class EdData:
    order: int
    center_order: int
    center_rank: int

    @property
    def value(self) -> int:
        quotient = self.order // self.center_order
        root = math.isqrt(quotient)
        if root * root != quotient:
            raise DomainError(f"|G/C(G)| = {quotient} is not a perfect square")
        return root + self.center_rank - 1


def analyze_for_ed(group: FiniteGroup) -> EdData:
    """Check that G is a p-group with central cyclic commutator subgroup and
    collect the data the essential-dimension formula needs."""
    pp = _prime_power(group.order)
    if group.order > 1 and pp is None:
        raise DomainError(f"order {group.order} is not a prime power")
    p = pp[0] if pp else 2
    center = group.center()
    cset = set(center)
    comm = group.commutator_subgroup()
    if not comm <= cset:
        raise DomainError("commutator subgroup is not central")
    if not _is_cyclic(group, comm):
        raise DomainError("commutator subgroup is not cyclic")
    return EdData(group.order, len(center), abelian_rank(group, center, p))


# ---------------------------------------------------------------------------
# G_n summaries


CENTER_KINDS = ("Z2", "Z4", "Z2xZ2")


@dataclass(frozen=True)
class GroupSummary:
    n: int
    order: int
    center_kind: str
    center_elements: tuple[CliffordElement, ...]
    commutator_subgroup_order: int
    exponent: int
    ed_value: int

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "center_kind": self.center_kind,
            "center": [str(z) for z in self.center_elements],
            "commutator_subgroup_order": self.commutator_subgroup_order,
            "exponent": self.exponent,
            "ed": self.ed_value,
        }


def center_rank(kind: str) -> int:
    return {"Z2": 1, "Z4": 1, "Z2xZ2": 2}[kind]


def _closed_form_center(n: int) -> tuple[str, tuple[CliffordElement, ...]]:
    one = CliffordElement.identity(n)
    if n % 2:
        return "Z2", (one, -one)
    full = CliffordElement(1, (1 << n) - 1, n)
    kind = "Z4" if n % 4 == 2 else "Z2xZ2"
    return kind, (one, -one, full, -full)


def group_summary(n: int, brute_force: bool | None = None) -> GroupSummary:
    """Structure of G_n from the closed-form case analysis.

    For n <= 14 (or when ``brute_force`` is true) the center, commutator
    subgroup, order and exponent are also recomputed by enumeration and any
    disagreement raises.
    """
    if not 2 <= n <= MAX_N:
        raise DomainError(f"n must be in 2..{MAX_N}, got {n}")
    kind, center = _closed_form_center(n)
    # G_2 = {+-1, +-e12} is cyclic of order 4, so its commutator subgroup is trivial
    comm_order = 1 if n == 2 else 2
    summary = GroupSummary(
        n=n,
        order=2**n,
        center_kind=kind,
        center_elements=center,
        commutator_subgroup_order=comm_order,
        exponent=4,
        ed_value=ed_formula(EdData(2**n, len(center), center_rank(kind))),
    )
    if brute_force is None:
        brute_force = n <= BRUTE_FORCE_MAX_N
    if brute_force:
        observed = brute_force_summary(n)
        if observed != summary:
            raise AssertionError(f"closed form {summary} disagrees with enumeration {observed}")
    return summary


def clifford_group(n: int) -> FiniteGroup:
    return FiniteGroup(enumerate_group(n), packed_mul, 0, generators(n), packed_inverse)


def brute_force_summary(n: int) -> GroupSummary:
    """Every field of the summary recomputed from the multiplication alone."""
    g = clifford_group(n)
    center = sorted(g.center())
    comm = g.commutator_subgroup()
    rank = abelian_rank(g, center, 2)
    if len(center) == 2:
        kind = "Z2"
    elif _is_cyclic(g, set(center)):
        kind = "Z4"
    elif rank == 2 and len(center) == 4:
        kind = "Z2xZ2"
    else:
        raise AssertionError(f"unexpected center of order {len(center)}")
    # canonical ordering: +1, -1, then +-e_full
    elems = tuple(sorted((_unpack(c, n) for c in center), key=lambda z: (z.subset, -z.sign)))
    data = analyze_for_ed(g)
    return GroupSummary(
        n=n,
        order=g.order,
        center_kind=kind,
        center_elements=elems,
        commutator_subgroup_order=len(comm),
        exponent=g.exponent(),
        ed_value=data.value,
    )


def ed_formula(data: GroupSummary | EdData | FiniteGroup) -> int:
    """sqrt(|G/C(G)|) + rank C(G) - 1 for a p-group with central cyclic
    commutator subgroup.

    A :class:`FiniteGroup` is checked against those hypotheses first.
    """
    if isinstance(data, FiniteGroup):
        data = analyze_for_ed(data)
    elif isinstance(data, GroupSummary):
        data = EdData(data.order, len(data.center_elements), center_rank(data.center_kind))
    return data.value


def ed_closed_form(n: int) -> int:
    """ed(G_n) by congruence class of n."""
    if n % 2:
        return 2 ** ((n - 1) // 2)
    if n % 4 == 2:
        return 2 ** ((n - 2) // 2)
    return 2 ** ((n - 2) // 2) + 1


__all__ = [
    "CliffordElement",
    "GroupSummary",
    "FiniteGroup",
    "cliff_mul",
    "pair_commutator",
    "commutator",
    "group_summary",
    "brute_force_summary",
    "ed_formula",
    "ed_closed_form",
    "enumerate_group",
    "packed_mul",
]
