"""Deterministic TSV tables of the bound calculators."""

from __future__ import annotations

from .bounds import (
    ROST_TABLE,
    BoundReport,
    RealWitness,
    merkurjev_lower,
    pfister3_lower_bound,
    spin_lower,
    spin_upper,
)

HEADER = ("n", "bound", "value", "vacuous", "validity")
TABLES = ("rost", "spin", "pfister", "all")


def _row(report: BoundReport) -> tuple[str, ...]:
    value = report.value
    if isinstance(value, RealWitness):
        value = f"[{value.lo.numerator}/{value.lo.denominator}, {value.hi.numerator}/{value.hi.denominator}]"
    return (str(report.n), report.name, str(value), str(report.vacuous).lower(), report.validity_note)


def rost_rows() -> list[tuple[str, ...]]:
    return [(str(n), "rost", str(v), "false", "exact, 3 <= n <= 14") for n, v in sorted(ROST_TABLE.items())]


def spin_rows(start: int = 15, stop: int = 40) -> list[tuple[str, ...]]:
    rows = []
    for n in range(start, stop + 1):
        rows.append(_row(spin_lower(n)))
        if n % 4 == 0:
            rows.append(_row(merkurjev_lower(n)))
        rows.append(_row(spin_upper(n)))
    return rows


def pfister_rows(start: int = 2, stop: int = 64) -> list[tuple[str, ...]]:
    rows = []
    for n in range(start, stop + 1, 2):
        rep = pfister3_lower_bound(n)
        row = list(_row(rep))
        row[1] = f"{rep.name}(least={rep.details['least_integer']})"
        rows.append(tuple(row))
    return rows


def table_rows(which: str) -> list[tuple[str, ...]]:
    if which == "rost":
        return rost_rows()
    if which == "spin":
        return spin_rows()
    if which == "pfister":
        return pfister_rows()
    if which == "all":
        return rost_rows() + spin_rows() + pfister_rows()
    raise ValueError(f"unknown table {which!r}; choose from {TABLES}")


def to_tsv(rows: list[tuple[str, ...]]) -> str:
    lines = ["\t".join(HEADER)] + ["\t".join(r) for r in rows]
    return "\n".join(lines) + "\n"


def render(which: str) -> str:
    return to_tsv(table_rows(which))
