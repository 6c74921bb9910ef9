"""Diagonal quadratic forms and their classical invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fields import (
    QQ,
    REAL,
    BaseField,
    DomainError,
    FieldElem,
    Place,
    hilbert_symbol,
    relevant_places,
    square_class,
)


@dataclass(frozen=True)
class DiagonalForm:
    """The form <a_1, ..., a_n> = sum a_i x_i^2. The empty form is allowed."""

    coefficients: tuple[FieldElem, ...]
    field: BaseField = QQ

    def __post_init__(self):
        coeffs = tuple(FieldElem.of(a, self.field) for a in self.coefficients)
        if any(a.is_zero() for a in coeffs):
            raise DomainError("diagonal coefficients must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, values: Iterable, field: BaseField = QQ) -> DiagonalForm:
        return cls(tuple(values), field)

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: DiagonalForm) -> DiagonalForm:
        return direct_sum(self, other)

    def __neg__(self) -> DiagonalForm:
        return scale(self, -1)

    def __str__(self):
        return "<" + ", ".join(str(a) for a in self.coefficients) + ">"


def hyperbolic(k: int = 1, field: BaseField = QQ) -> DiagonalForm:
    """h^{(+)k} with h = <1, -1>."""
    return DiagonalForm.of([1, -1] * k, field)


def direct_sum(q1: DiagonalForm, q2: DiagonalForm) -> DiagonalForm:
    if q1.field != q2.field:
        raise DomainError(f"cannot add forms over {q1.field} and {q2.field}")
    return DiagonalForm(q1.coefficients + q2.coefficients, q1.field)


def orthogonal_sum(forms: Sequence[DiagonalForm], field: BaseField = QQ) -> DiagonalForm:
    out = DiagonalForm((), field)
    for q in forms:
        out = direct_sum(out, q)
    return out


def scale(q: DiagonalForm, c) -> DiagonalForm:
    c = FieldElem.of(c, q.field)
    if c.is_zero():
        raise DomainError("cannot scale a form by zero")
    return DiagonalForm(tuple(a * c for a in q.coefficients), q.field)


def diagonalize(gram: Sequence[Sequence], field: BaseField = QQ) -> DiagonalForm:
    """Congruence-diagonalize a symmetric nondegenerate Gram matrix.

    Symmetric Gaussian elimination; when every remaining diagonal entry is
    zero but some off-diagonal b_ij is not, replacing e_i by e_i + e_j creates
    the nonzero pivot 2 b_ij (char != 2).
    """
    n = len(gram)
    m = [[FieldElem.of(x, field) for x in row] for row in gram]
    if any(len(row) != n for row in m):
        raise DomainError("Gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise DomainError(f"Gram matrix not symmetric at ({i}, {j})")

    diag = []
    for k in range(n):
        piv = next((i for i in range(k, n) if not m[i][i].is_zero()), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if not m[i][j].is_zero()),
                None,
            )
            if pair is None:
                raise DomainError("Gram matrix is singular")
            i, j = pair
            # row/column operation e_i <- e_i + e_j
            for c in range(n):
                m[i][c] = m[i][c] + m[j][c]
            for r in range(n):
                m[r][i] = m[r][i] + m[r][j]
            piv = i
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for row in m:
                row[k], row[piv] = row[piv], row[k]
        d = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f.is_zero():
                continue
            for c in range(k, n):
                m[i][c] = m[i][c] - f * m[k][c]
            for r in range(k, n):
                m[r][i] = m[r][i] - f * m[r][k]
        diag.append(d)
    return DiagonalForm(tuple(diag), field)


def determinant(q: DiagonalForm) -> FieldElem:
    d = FieldElem.of(1, q.field)
    for a in q.coefficients:
        d = d * a
    return d


def signed_discriminant(q: DiagonalForm) -> FieldElem:
    """Square class of (-1)^{n(n-1)/2} a_1 ... a_n."""
    n = q.dim
    d = determinant(q)
    if (n * (n - 1) // 2) % 2:
        d = -d
    return square_class(d)


def _require_rational(q: DiagonalForm):
    if not q.field.is_rational:
        raise DomainError(f"Hasse-Witt symbols are only computed over Q, not {q.field}")


def hasse_witt(q: DiagonalForm, v: Place) -> int:
    """Hasse invariant prod_{i<j} (a_i, a_j)_v of a form over Q.

    This is the raw Hasse product, which depends on the dimension of the form
    and not only on its Witt class; see :func:`wittforge.witt.clifford_defect`
    for the normalized version used in Witt-ring decisions.
    """
    _require_rational(q)
    a = q.coefficients
    s = 1
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            s *= hilbert_symbol(a[i], a[j], v)
    return s


def signature(q: DiagonalForm) -> int:
    _require_rational(q)
    return sum(1 if a.value > 0 else -1 for a in q.coefficients)


def places(q: DiagonalForm) -> list[Place]:
    _require_rational(q)
    return relevant_places(*q.coefficients)


@dataclass(frozen=True)
class WittInvariants:
    dimension: int
    signed_discriminant: FieldElem
    hasse_symbols: dict = field(default_factory=dict)
    signature: int | None = None

    def hasse(self, v: Place) -> int:
        return self.hasse_symbols.get(v, 1)

    def as_record(self) -> dict:
        rec = {
            "dimension": self.dimension,
            "signed_discriminant": str(self.signed_discriminant),
        }
        if self.signature is not None:
            rec["signature"] = self.signature
            rec["hasse"] = {str(v): s for v, s in sorted(self.hasse_symbols.items())}
        return rec


def invariants(q: DiagonalForm) -> WittInvariants:
    """Dimension, signed discriminant and, over Q, Hasse symbols and signature.

    Only places with a symbol of -1 are stored; ``hasse`` returns +1 elsewhere.
    """
    disc = signed_discriminant(q)
    if not q.field.is_rational:
        return WittInvariants(q.dim, disc)
    symbols = {}
    for v in places(q):
        s = hasse_witt(q, v)
        if s == -1:
            symbols[v] = s
    return WittInvariants(q.dim, disc, symbols, signature(q))


# ---------------------------------------------------------------------------
# Serialization shared with the CLI


def field_to_record(field: BaseField):
    return "Q" if field.is_rational else {"Fp": field.p}


def field_from_record(rec) -> BaseField:
    if rec == "Q":
        return QQ
    if isinstance(rec, dict) and set(rec) == {"Fp"}:
        return BaseField(int(rec["Fp"]))
    if isinstance(rec, str) and rec.startswith("Fp:"):
        return BaseField(int(rec[3:]))
    raise DomainError(f"field: expected 'Q' or {{'Fp': p}}, got {rec!r}")


def form_to_record(q: DiagonalForm) -> dict:
    return {"field": field_to_record(q.field), "diag": [str(a) for a in q.coefficients]}


def form_from_record(rec: dict) -> DiagonalForm:
    if not isinstance(rec, dict):
        raise DomainError("form: expected an object with 'field' and 'diag'")
    if "field" not in rec:
        raise DomainError("field: missing")
    if "diag" not in rec or not isinstance(rec["diag"], list):
        raise DomainError("diag: expected a list of strings")
    field = field_from_record(rec["field"])
    coeffs = []
    for i, s in enumerate(rec["diag"]):
        if not isinstance(s, str):
            raise DomainError(f"diag[{i}]: expected a string, got {s!r}")
        try:
            coeffs.append(field.parse(s))
        except DomainError as exc:
            raise DomainError(f"diag[{i}]: {exc}") from exc
    return DiagonalForm(tuple(coeffs), field)


def dumps_form(q: DiagonalForm) -> str:
    return json.dumps(form_to_record(q))


def loads_form(text: str) -> DiagonalForm:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"form: invalid JSON ({exc.msg})") from exc
    return form_from_record(rec)


__all__ = [
    "DiagonalForm",
    "WittInvariants",
    "REAL",
    "hyperbolic",
    "direct_sum",
    "orthogonal_sum",
    "scale",
    "diagonalize",
    "signed_discriminant",
    "hasse_witt",
    "signature",
    "invariants",
    "form_to_record",
    "form_from_record",
]
