"""Command-line interface: ``wittforge <verb> [options]``.

Exit status is 0 on success, 1 on a domain error (for example a form outside
the requested ideal) and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, clifford, tables
from .fields import QQ, BaseField, DomainError
from .forms import (
    DiagonalForm,
    form_from_record,
    form_to_record,
    invariants,
)
from .pfister import (
    PfisterSlots,
    assemble_phi,
    decompose_I1,
    decompose_I2,
    signed_expansion,
)
from .selftest import run_selftest
from .witt import ideal_membership, is_hyperbolic, witt_equivalent

VERBS = (
    "invariants",
    "witt-equiv",
    "hyperbolic",
    "ideal",
    "pfister-expand",
    "decompose",
    "phi",
    "clifford",
    "ed",
    "bounds",
    "table",
    "selftest",
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# operand parsing


def parse_field(text: str | None) -> BaseField:
    if text is None or text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            return BaseField(int(text[3:]))
        except (ValueError, DomainError) as exc:
            raise UsageError(f"--field: {exc}") from exc
    raise UsageError(f"--field: expected Q or Fp:<p>, got {text!r}")


def _load_text(spec: str) -> str:
    path = Path(spec)
    if not spec.lstrip().startswith(("{", "[")) and path.is_file():
        return path.read_text()
    return spec


def parse_form(spec: str, field: BaseField) -> DiagonalForm:
    """A form given inline as JSON ({"field": ..., "diag": [...]}), as a
    comma-separated coefficient list, or as a path to a JSON file."""
    text = _load_text(spec).strip()
    try:
        if text.startswith("{"):
            try:
                rec = json.loads(text)
            except json.JSONDecodeError as exc:
                raise UsageError(f"--form: invalid JSON ({exc.msg})") from exc
            return form_from_record(rec)
        parts = [s for s in text.strip("<>[] ").split(",") if s.strip()]
        return DiagonalForm(tuple(field.parse(s) for s in parts), field)
    except DomainError as exc:
        raise UsageError(f"--form: {exc}") from exc


def parse_slots(spec: str, field: BaseField, sign: int = 1) -> PfisterSlots:
    text = _load_text(spec).strip()
    try:
        if text.startswith("{"):
            return PfisterSlots.from_record(json.loads(text), field)
        return PfisterSlots(tuple(field.parse(s) for s in text.split(",")), sign, field)
    except (DomainError, json.JSONDecodeError) as exc:
        raise UsageError(f"--slots: {exc}") from exc


def parse_triples(spec: str, field: BaseField) -> list[PfisterSlots]:
    text = _load_text(spec).strip()
    try:
        if text.startswith("["):
            return [PfisterSlots.from_record(r, field) for r in json.loads(text)]
        out = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            sign = -1 if chunk.startswith("-") and chunk[1:2] == "(" else 1
            chunk = chunk.lstrip("+-").strip("() ")
            out.append(PfisterSlots(tuple(field.parse(s) for s in chunk.split(",")), sign, field))
        return out
    except (DomainError, json.JSONDecodeError, AttributeError, TypeError) as exc:
        raise UsageError(f"--triples: {exc}") from exc


# ---------------------------------------------------------------------------
# verbs: each returns (record, human_text)


def _forms(args, count: int) -> list[DiagonalForm]:
    field = parse_field(args.field)
    if not args.form or len(args.form) != count:
        raise UsageError(f"--form: expected {count} form(s), got {len(args.form or [])}")
    return [parse_form(f, field) for f in args.form]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_invariants(args):
    (q,) = _forms(args, 1)
    inv = invariants(q)
    rec = inv.as_record()
    lines = [f"form: {q} over {q.field}", f"dimension: {inv.dimension}",
             f"signed discriminant: {inv.signed_discriminant}"]
    if inv.signature is not None:
        lines.append(f"signature: {inv.signature}")
        bad = ", ".join(str(v) for v in sorted(inv.hasse_symbols)) or "none"
        lines.append(f"Hasse symbols equal to -1 at: {bad}")
    return rec, "\n".join(lines)


def cmd_witt_equiv(args):
    q1, q2 = _forms(args, 2)
    result = witt_equivalent(q1, q2)
    return {"witt_equivalent": result}, _bool(result)


def cmd_hyperbolic(args):
    (q,) = _forms(args, 1)
    result = is_hyperbolic(q)
    return {"hyperbolic": result}, _bool(result)


def cmd_ideal(args):
    (q,) = _forms(args, 1)
    level = 0 if args.level is None else args.level
    result = ideal_membership(q, level)
    return {"level": level, "member": result}, _bool(result)


def cmd_pfister_expand(args):
    if not args.slots:
        raise UsageError("--slots: required")
    p = parse_slots(args.slots, parse_field(args.field), -1 if args.sign == "-" else 1)
    q = signed_expansion(p)
    return {"pfister": p.as_record(), "form": form_to_record(q)}, f"{p} = {q}"


def cmd_decompose(args):
    (q,) = _forms(args, 1)
    level = 1 if args.level is None else args.level
    if level == 1:
        terms = decompose_I1(q)
    elif level == 2:
        terms = decompose_I2(q)
    else:
        raise DomainError("explicit decompositions exist for levels 1 and 2 only")
    rec = {"level": level, "count": len(terms), "terms": [t.as_record() for t in terms]}
    human = f"{len(terms)} term(s): " + (" ".join(map(str, terms)) or "0")
    return rec, human


def cmd_phi(args):
    if not args.triples:
        raise UsageError("--triples: required")
    triples = parse_triples(args.triples, parse_field(args.field))
    phi = assemble_phi(triples)
    member = ideal_membership(phi, 3)
    rec = {"r": len(triples), "dimension": phi.dim, "form": form_to_record(phi), "in_I3": member}
    return rec, f"phi = {phi}\ndimension: {phi.dim}\nin I^3: {_bool(member)}"


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n: required")
    return args.n


def cmd_clifford(args):
    n = _need_n(args)
    s = clifford.group_summary(n)
    rec = s.as_record()
    lines = [f"G_{n}: order {s.order}", f"center: {s.center_kind} = {{{', '.join(map(str, s.center_elements))}}}",
             f"commutator subgroup order: {s.commutator_subgroup_order}", f"exponent: {s.exponent}",
             f"ed: {s.ed_value}"]
    return rec, "\n".join(lines)


def cmd_ed(args):
    n = _need_n(args)
    s = clifford.group_summary(n)
    value = clifford.ed_formula(s)
    rec = {"n": n, "ed_G_n": value, "closed_form": clifford.ed_closed_form(n),
           "minus_dim_spin": value - bounds.dim_spin(n)}
    return rec, f"ed(G_{n}) = {value}"


def cmd_bounds(args):
    n = _need_n(args)
    reports = bounds.spin_bounds(n)
    rec = {k: r.as_record() for k, r in reports.items()}
    lines = []
    lower = reports.get("merkurjev_lower") or reports.get("spin_lower")
    if lower is not None:
        lines.append(f"lower {lower.value}" + (" (vacuous)" if lower.vacuous else ""))
    if "spin_upper" in reports:
        lines.append(f"upper {reports['spin_upper'].value}")
    if n >= 15:
        lo, hi = bounds.tn_interval(n)
        rec["tn_interval"] = [lo.value, hi.value]
        lines.append(f"ed T_n in [{lo.value}, {hi.value}]")
    if n % 2 == 0 and n >= 2:
        pf = bounds.pfister3_lower_bound(n)
        rec["pfister3_lower"] = pf.as_record()
        lines.append(f"Pf(3, {n}) >= {pf.value}" + (" (vacuous)" if pf.vacuous else ""))
    for k, r in reports.items():
        lines.append(f"  {k}: {r.value}  [{r.validity_note}]")
    return rec, "\n".join(lines)


def cmd_table(args):
    which = args.which or "all"
    if which not in tables.TABLES:
        raise UsageError(f"--which: expected one of {tables.TABLES}, got {which!r}")
    text = tables.render(which)
    return None, text


def cmd_selftest(args):
    results = run_selftest(trials=args.trials)
    rec = {"results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.detail})" for r in results]
    if not all(r.passed for r in results):
        rec["failed"] = True
    return rec, "\n".join(lines)


COMMANDS = {
    "invariants": cmd_invariants,
    "witt-equiv": cmd_witt_equiv,
    "hyperbolic": cmd_hyperbolic,
    "ideal": cmd_ideal,
    "pfister-expand": cmd_pfister_expand,
    "decompose": cmd_decompose,
    "phi": cmd_phi,
    "clifford": cmd_clifford,
    "ed": cmd_ed,
    "bounds": cmd_bounds,
    "table": cmd_table,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wittforge", description=__doc__.splitlines()[0])
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--field", help="Q (default) or Fp:<p>")
    parser.add_argument("--form", action="append", help="inline list '1,-2,3/5', JSON record, or file")
    parser.add_argument("--level", type=int, choices=range(4))
    parser.add_argument("--n", type=int)
    parser.add_argument("--slots", help="Pfister slots 'a,b,c' or a JSON record")
    parser.add_argument("--sign", choices=("+", "-"), default="+")
    parser.add_argument("--triples", help="'a,b,c; -(d,e,f)' or a JSON list of Pfister records")
    parser.add_argument("--which", help=f"table to print: one of {', '.join(tables.TABLES)}")
    parser.add_argument("--trials", type=int, default=40)
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec, human = COMMANDS[args.verb](args)
        status = 1 if rec and rec.get("failed") else 0
    except UsageError as exc:
        print(f"wittforge: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"wittforge: domain error: {exc}", file=sys.stderr)
        return 1
    if args.format == "machine" and rec is not None:
        text = json.dumps(rec, sort_keys=True, indent=2) + "\n"
    else:
        text = human if human.endswith("\n") else human + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
