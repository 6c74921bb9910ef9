"""Pfister forms, the explicit I^1 / I^2 decompositions, and the phi assembly.

Convention: <<a_1, ..., a_r>> is the tensor product of the <1, a_i>, so the
expansion lists subset products with the empty product first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fields import QQ, BaseField, DomainError, FieldElem
from .forms import DiagonalForm, direct_sum, orthogonal_sum, scale
from .witt import (
    ideal_membership,
    is_hyperbolic,
    witt_class_key_fp,
    witt_equivalent,
)


@dataclass(frozen=True)
class PfisterSlots:
    """A signed r-fold Pfister form, ``sign * <<slots>>``, with 1 <= r <= 3."""

    slots: tuple[FieldElem, ...]
    sign: int = 1
    field: BaseField = QQ

    def __post_init__(self):
        slots = tuple(FieldElem.of(a, self.field) for a in self.slots)
        if not 1 <= len(slots) <= 3:
            raise DomainError(f"fold count must be 1, 2 or 3, got {len(slots)}")
        if any(a.is_zero() for a in slots):
            raise DomainError("Pfister slots must be nonzero")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "slots", slots)

    @property
    def fold(self) -> int:
        return len(self.slots)

    def negated(self) -> PfisterSlots:
        return PfisterSlots(self.slots, -self.sign, self.field)

    def as_record(self) -> dict:
        return {
            "fold": self.fold,
            "sign": "+" if self.sign == 1 else "-",
            "slots": [str(a) for a in self.slots],
        }

    @classmethod
    def from_record(cls, rec: dict, field: BaseField = QQ) -> PfisterSlots:
        try:
            sign = {"+": 1, "-": -1}[rec.get("sign", "+")]
        except KeyError:
            raise DomainError(f"sign: expected '+' or '-', got {rec.get('sign')!r}") from None
        slots = rec.get("slots")
        if not isinstance(slots, list):
            raise DomainError("slots: expected a list of strings")
        out = cls(tuple(field.parse(str(s)) for s in slots), sign, field)
        if "fold" in rec and rec["fold"] != out.fold:
            raise DomainError(f"fold: says {rec['fold']} but {out.fold} slots given")
        return out

    def __str__(self):
        return ("+" if self.sign == 1 else "-") + "<<" + ", ".join(map(str, self.slots)) + ">>"


def expand_pfister(p: PfisterSlots) -> DiagonalForm:
    """Diagonal expansion of <<a_1..a_r>> (unsigned): subset products, the
    empty product first, then subsets in lexicographic order."""
    one = p.field(1)
    coeffs = [one]
    for size in range(1, p.fold + 1):
        for combo in itertools.combinations(p.slots, size):
            prod = one
            for a in combo:
                prod = prod * a
            coeffs.append(prod)
    return DiagonalForm(tuple(coeffs), p.field)


def signed_expansion(p: PfisterSlots) -> DiagonalForm:
    q = expand_pfister(p)
    return q if p.sign == 1 else scale(q, -1)


def pure_part(p: PfisterSlots) -> DiagonalForm:
    """<a, b, c, ab, ac, bc, abc>: the 3-fold expansion without its leading 1."""
    if p.fold != 3:
        raise DomainError(f"pure part is defined for 3-fold forms, got {p.fold}-fold")
    q = expand_pfister(p)
    return DiagonalForm(q.coefficients[1:], q.field)


def witt_sum(terms: list[PfisterSlots], field: BaseField = QQ) -> DiagonalForm:
    """A form representing the signed sum of the given Pfister classes."""
    return orthogonal_sum([signed_expansion(t) for t in terms], field)


def _simplify(terms: list[PfisterSlots]) -> list[PfisterSlots]:
    """Drop hyperbolic terms and cancel +P, -P' pairs with P ~ P'."""
    kept = [t for t in terms if not is_hyperbolic(expand_pfister(t))]
    out: list[PfisterSlots] = []
    for t in kept:
        match = next(
            (
                i
                for i, u in enumerate(out)
                if u.sign == -t.sign and witt_equivalent(expand_pfister(u), expand_pfister(t))
            ),
            None,
        )
        if match is None:
            out.append(t)
        else:
            del out[match]
    return out


def decompose_I1(q: DiagonalForm) -> list[PfisterSlots]:
    """Write an even-dimensional q as a signed sum of at most dim(q) one-fold
    Pfister forms, using <a, b> ~ <<a>> - <<-b>>."""
    if not ideal_membership(q, 1):
        raise DomainError(f"form of odd dimension {q.dim} is not in I")
    terms = []
    a = q.coefficients
    for i in range(0, q.dim, 2):
        terms.append(PfisterSlots((a[i],), 1, q.field))
        terms.append(PfisterSlots((-a[i + 1],), -1, q.field))
    return _simplify(terms)


def decompose_I2_terms(q: DiagonalForm) -> list[PfisterSlots]:
    """All n - 1 two-fold terms of the telescoping identity, before any
    hyperbolic term is dropped.

    Term i (2 <= i <= n) is (-1)^i <<(-1)^i a_i, (-1)^(i(i-1)/2 + 1) a_1...a_(i-1)>>.
    Consecutive terms alternately leave <-1> and <1> behind, which cancel, so
    the identity holds without a square root of -1. When the signed
    discriminant is trivial the i = n term is <<a_n, -a_n>> up to squares, hence
    hyperbolic.
    """
    a = q.coefficients
    terms = []
    prefix = a[0]
    for i in range(2, q.dim + 1):
        ai = a[i - 1]
        first = ai if i % 2 == 0 else -ai
        second = prefix if (i * (i - 1) // 2 + 1) % 2 == 0 else -prefix
        terms.append(PfisterSlots((first, second), 1 if i % 2 == 0 else -1, q.field))
        prefix = prefix * ai
    return terms


def decompose_I2(q: DiagonalForm) -> list[PfisterSlots]:
    """Write q in I^2 as a signed sum of at most dim(q) - 2 two-fold Pfister
    forms."""
    if not ideal_membership(q, 2):
        raise DomainError("form is not in I^2: needs even dimension and trivial signed discriminant")
    return _simplify(decompose_I2_terms(q))


def assemble_phi(triples: list[PfisterSlots]) -> DiagonalForm:
    """Concatenate the signed pure parts of r three-fold Pfister forms,
    prefixed by <1> when r is odd. Dimension is 7r or 7r + 1.

    Each signed term contributes sign * <1> besides its pure part; those
    leading entries pair off into hyperbolic planes when the signs alternate
    starting from +, and <1> is what remains for odd r.
    """
    if not triples:
        raise DomainError("assemble_phi needs at least one triple")
    if any(t.fold != 3 for t in triples):
        raise DomainError("assemble_phi takes 3-fold Pfister forms only")
    field = triples[0].field
    parts = [scale(pure_part(t), t.sign) for t in triples]
    phi = orthogonal_sum(parts, field)
    if len(triples) % 2:
        phi = direct_sum(DiagonalForm.of([1], field), phi)
    return phi


def pfister_number_upper_fp(q: DiagonalForm, level: int, max_terms: int = 8) -> int:
    """Fewest signed ``level``-fold Pfister forms over F_p summing to q in W(F_p).

    Breadth-first over the Witt classes reachable with r terms; slots range
    over the square-class representatives.
    """
    if q.field.is_rational:
        raise DomainError("Pfister-number search is only available over F_p")
    if level not in (1, 2, 3):
        raise DomainError(f"level must be 1, 2 or 3, got {level}")
    if not ideal_membership(q, level):
        raise DomainError(f"form is not in I^{level}")
    field = q.field
    target = witt_class_key_fp(q)
    generators = []
    for slots in itertools.product(field.square_class_reps(), repeat=level):
        for sign in (1, -1):
            generators.append(signed_expansion(PfisterSlots(slots, sign, field)))
    zero = DiagonalForm((), field)
    frontier = {witt_class_key_fp(zero): zero}
    seen = set(frontier)
    for r in range(max_terms + 1):
        if target in frontier:
            return r
        nxt = {}
        for rep in frontier.values():
            for g in generators:
                s = direct_sum(rep, g)
                key = witt_class_key_fp(s)
                if key not in seen:
                    seen.add(key)
                    nxt[key] = s
        frontier = nxt
        if not frontier:
            break
    raise DomainError(f"no decomposition with at most {max_terms} terms found")


__all__ = [
    "PfisterSlots",
    "expand_pfister",
    "signed_expansion",
    "pure_part",
    "witt_sum",
    "decompose_I1",
    "decompose_I2",
    "decompose_I2_terms",
    "assemble_phi",
    "pfister_number_upper_fp",
]
