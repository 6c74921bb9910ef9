"""Decision procedures in the Witt ring of Q and of F_p."""

from __future__ import annotations

import itertools

from .fields import BaseField, DomainError, FieldElem, Place, hilbert_symbol, relevant_places
from .forms import (
    DiagonalForm,
    diagonalize,
    direct_sum,
    hasse_witt,
    hyperbolic,
    scale,
    signature,
    signed_discriminant,
)

IDEAL_LEVELS = (0, 1, 2, 3)


def _hyperbolic_hasse(dim: int, v: Place) -> int:
    # Hasse product of h^{(+)k}: C(k, 2) copies of (-1, -1)
    k = dim // 2
    return hilbert_symbol(-1, -1, v) if (k * (k - 1) // 2) % 2 else 1


def clifford_defect(q: DiagonalForm) -> dict[Place, int]:
    """Places where the Hasse product of ``q`` differs from that of the
    hyperbolic form of the same (even) dimension.

    For q with even dimension and trivial signed discriminant this is the
    Clifford (Witt) invariant, which depends only on the Witt class of q.
    """
    if q.dim % 2:
        raise DomainError("defined for even-dimensional forms only")
    out = {}
    for v in relevant_places(*q.coefficients):
        if hasse_witt(q, v) != _hyperbolic_hasse(q.dim, v):
            out[v] = -1
    return out


def is_hyperbolic(q: DiagonalForm) -> bool:
    """Whether q is a sum of hyperbolic planes.

    Over Q forms are classified by dimension, signature, discriminant and
    Hasse symbols, so q is compared with h^{(+)n/2} invariant by invariant.
    Over F_p dimension and discriminant already classify.
    """
    if q.dim % 2:
        return False
    if signed_discriminant(q) != 1:
        return False
    if not q.field.is_rational:
        return True
    return signature(q) == 0 and not clifford_defect(q)


def _check_same_field(q1: DiagonalForm, q2: DiagonalForm):
    if q1.field != q2.field:
        raise DomainError(f"forms over different fields: {q1.field} vs {q2.field}")


def witt_equivalent(q1: DiagonalForm, q2: DiagonalForm) -> bool:
    _check_same_field(q1, q2)
    return is_hyperbolic(direct_sum(q1, scale(q2, -1)))


def ideal_membership(q: DiagonalForm, level: int) -> bool:
    """Whether the Witt class of q lies in I^level, for level in 0..3."""
    if level not in IDEAL_LEVELS:
        raise DomainError(f"ideal level must be one of {IDEAL_LEVELS}, got {level}")
    if level == 0:
        return True
    if q.dim % 2:
        return False
    if level == 1:
        return True
    if signed_discriminant(q) != 1:
        return False
    if level == 2 or not q.field.is_rational:
        return True
    return not clifford_defect(q)


# ---------------------------------------------------------------------------
# Finite fields: explicit isotropic vectors and anisotropic kernels


def _projective_points(n: int, p: int):
    # first nonzero coordinate normalized to 1
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def find_isotropic_vector(q: DiagonalForm) -> tuple[int, ...] | None:
    """Exhaustive search of the projective space for q(x) = 0 over F_p."""
    if q.field.is_rational:
        raise DomainError("exhaustive isotropy search needs a finite field")
    p = q.field.p
    a = [c.value for c in q.coefficients]
    for x in _projective_points(q.dim, p):
        if sum(ai * xi * xi for ai, xi in zip(a, x)) % p == 0:
            return x
    return None


def _nullspace(rows: list[list[FieldElem]], n: int, field: BaseField) -> list[list[FieldElem]]:
    """Basis of {x : rows . x = 0} by row reduction."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    zero, one = field(0), field(1)
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        vec = [zero] * n
        vec[free] = one
        for i, c in enumerate(pivots):
            vec[c] = -m[i][free]
        basis.append(vec)
    return basis


def split_hyperbolic_plane(q: DiagonalForm, v: tuple[int, ...]) -> DiagonalForm:
    """Given an isotropic vector v of q, return a diagonal form for the
    orthogonal complement of a hyperbolic plane containing v."""
    field = q.field
    a = list(q.coefficients)
    n = q.dim
    vv = [field(x) for x in v]
    bv = [a[i] * vv[i] for i in range(n)]  # B(v, e_i)
    j = next(i for i in range(n) if not bv[i].is_zero())
    w = [field(1 if i == j else 0) for i in range(n)]
    bw = [a[i] * w[i] for i in range(n)]
    complement = _nullspace([bv, bw], n, field)
    if not complement:
        return DiagonalForm((), field)
    gram = [
        [sum((a[k] * x[k] * y[k] for k in range(n)), field(0)) for y in complement]
        for x in complement
    ]
    return diagonalize(gram, field)


def anisotropic_kernel_fp(q: DiagonalForm) -> DiagonalForm:
    """Anisotropic form Witt-equivalent to q over F_p (dimension <= 2)."""
    if q.field.is_rational:
        raise DomainError("anisotropic_kernel_fp needs a finite field")
    while q.dim >= 2:
        v = find_isotropic_vector(q)
        if v is None:
            break
        q = split_hyperbolic_plane(q, v)
    return q


def witt_class_key_fp(q: DiagonalForm) -> tuple[int, FieldElem]:
    """Complete invariant of a Witt class over F_p: (dim mod 2, signed discriminant)."""
    if q.field.is_rational:
        raise DomainError("finite fields only")
    return q.dim % 2, signed_discriminant(q)


def pad_hyperbolic(q: DiagonalForm, dim: int) -> DiagonalForm:
    if (dim - q.dim) % 2 or dim < q.dim:
        raise DomainError("padding must add whole hyperbolic planes")
    return direct_sum(q, hyperbolic((dim - q.dim) // 2, q.field))


__all__ = [
    "is_hyperbolic",
    "witt_equivalent",
    "ideal_membership",
    "clifford_defect",
    "anisotropic_kernel_fp",
    "find_isotropic_vector",
    "witt_class_key_fp",
]
