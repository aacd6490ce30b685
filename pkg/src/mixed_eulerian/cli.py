"""Command-line interface.

Exit codes: 0 on success, 1 when a verification suite finds a mismatch,
2 when methods disagree on a value, 64 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import diagrams as dg
from .mrules import classify_pair, m_derive, m_lookup, realizable_triples
from .oracles import (
    mixed_eulerian_divsym,
    mixed_eulerian_quotient,
    mixed_eulerian_weylsum,
    permutohedron_volume,
    verify_appendix,
)
from .petring import mixed_eulerian
from .rootsys import (
    DEFAULT_ENUMERATION_CAP,
    RootSystem,
    RootSystemError,
    _closed_form_order,
    all_compositions,
    build_root_system,
    parse_type,
    vertices_of,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DISAGREE = 2
EXIT_USAGE = 64

SEED_ENV = "MIXED_EULERIAN_SEED"
METHODS = ("reduce", "diagrams", "divsym", "weylsum", "quotient")

DEFAULT_MTABLE_TYPES = (
    "A2 A3 A4 A5 A6 A7 A8 B2 B3 B4 B5 B6 C2 C3 C4 C5 C6 D4 D5 D6 D7 D8 E6 E7 E8 F4 G2".split()
)
DEFAULT_APPENDIX_TYPES = "B4 C4 D5 F4 G2 E6 E7 E8".split()


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Query:
    command: str
    type_label: Optional[str] = None
    rank: Optional[int] = None
    composition: Optional[tuple[int, ...]] = None
    fmt: str = "plain"
    method: str = "reduce"
    seed: int = 0
    cap: int = DEFAULT_ENUMERATION_CAP
    out: Optional[str] = None
    types: tuple[str, ...] = ()
    vector: tuple[Fraction, ...] = ()
    verify_m: bool = False


def format_value(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"composition must be comma-separated integers, got {text!r}") from None
    if any(p < 0 for p in parts):
        raise UsageError("composition entries must be non-negative")
    return parts


def _parse_rs(text: str) -> RootSystem:
    try:
        return parse_type(text)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures through our exit code
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mixed-eulerian", description="Exact mixed Eulerian numbers of root systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("plain", "json")):
        sp.add_argument("--format", dest="fmt", choices=formats, default=formats[0])
        sp.add_argument("--seed", type=int, default=0, help=f"generic-point seed (env {SEED_ENV} overrides)")
        sp.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="Weyl group enumeration limit")
        sp.add_argument("--out", help="also write the output to this file")

    c = sub.add_parser("compute", help="one mixed Eulerian number")
    c.add_argument("type")
    c.add_argument("composition")
    c.add_argument("--method", choices=METHODS + ("all",), default="reduce")
    c.add_argument("--verify-m", action="store_true", help="re-derive every structure constant")
    common(c)

    t = sub.add_parser("table", help="all compositions of a type")
    t.add_argument("type")
    t.add_argument("--method", choices=METHODS + ("all",), default="reduce")
    common(t)

    d = sub.add_parser("diagrams", help="left-right diagrams (type A only)")
    d.add_argument("type")
    d.add_argument("composition")
    common(d, formats=("ascii", "svg", "json"))

    m = sub.add_parser("mtable", help="structure constants, table versus re-derivation")
    m.add_argument("types", nargs="*")
    common(m)

    v = sub.add_parser("volume", help="permutohedron volume for a comma-separated vector")
    v.add_argument("vector")
    common(v)

    f = sub.add_parser("verify", help="run the structure-constant and product-identity suites")
    f.add_argument("types", nargs="*")
    common(f)
    return p


def parse_args(argv: Sequence[str]) -> Query:
    ns = _build_parser().parse_args(list(argv))
    seed = ns.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer") from None
    base = dict(command=ns.command, fmt=ns.fmt, seed=seed, cap=ns.cap, out=ns.out)
    if ns.command in ("compute", "table", "diagrams"):
        rs = _parse_rs(ns.type)
        base.update(type_label=rs.type_label, rank=rs.rank)
        method = getattr(ns, "method", "diagrams")
        if ns.command == "diagrams" or method in ("diagrams", "divsym"):
            if rs.type_label != "A":
                raise UsageError(f"{ns.command if ns.command == 'diagrams' else method} is defined for type A only")
        base["method"] = method
        if ns.command != "table":
            comp = parse_composition(ns.composition)
            if len(comp) != rs.rank:
                raise UsageError(f"composition has {len(comp)} parts, {rs.name} needs {rs.rank}")
            if sum(comp) != rs.rank:
                raise UsageError(f"composition sums to {sum(comp)}, expected {rs.rank}")
            base["composition"] = comp
        base["verify_m"] = getattr(ns, "verify_m", False)
    elif ns.command in ("mtable", "verify"):
        for t in ns.types:
            _parse_rs(t)
        base["types"] = tuple(ns.types)
    elif ns.command == "volume":
        try:
            base["vector"] = tuple(Fraction(x) for x in ns.vector.split(","))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad vector {ns.vector!r}") from None
    return Query(**base)


# --------------------------------------------------------------------------


def _methods_for(rs: RootSystem, q: Query) -> list[str]:
    if q.method != "all":
        return [q.method]
    out = ["reduce"]
    if rs.type_label == "A":
        out += ["diagrams", "divsym"]
    if _closed_form_order(rs.type_label, rs.rank) <= q.cap:
        out.append("weylsum")
    out.append("quotient")
    return out


def _evaluate(rs: RootSystem, comp: tuple[int, ...], method: str, q: Query) -> Fraction:
    if method == "reduce":
        return mixed_eulerian(rs, comp, source="billey" if q.verify_m else "table")
    if method == "diagrams":
        return dg.mixed_eulerian_diagrams(comp)
    if method == "divsym":
        return mixed_eulerian_divsym(comp, seed=q.seed)
    if method == "weylsum":
        return mixed_eulerian_weylsum(rs, comp, seed=q.seed, cap=q.cap)
    if method == "quotient":
        return mixed_eulerian_quotient(rs, comp)
    raise UsageError(f"unknown method {method}")


def _compute_record(rs: RootSystem, comp: tuple[int, ...], q: Query) -> dict:
    values = {m: _evaluate(rs, comp, m, q) for m in _methods_for(rs, q)}
    first = next(iter(values.values()))
    return {
        "type": rs.type_label,
        "rank": rs.rank,
        "composition": list(comp),
        "value": format_value(first),
        "methods": {m: format_value(v) for m, v in values.items()},
        "integer": first.denominator == 1,
        "_agree": len(set(values.values())) == 1,
    }


def _public(record: dict) -> dict:
    return {k: v for k, v in record.items() if not k.startswith("_")}


def _run_compute(q: Query) -> tuple[int, str]:
    rs = build_root_system(q.type_label, q.rank)
    rec = _compute_record(rs, q.composition, q)
    if q.fmt == "json":
        text = json.dumps(_public(rec)) + "\n"
    elif len(rec["methods"]) == 1:
        text = rec["value"] + ("" if rec["integer"] else "  (not an integer)") + "\n"
    else:
        lines = [rec["value"] if rec["_agree"] else "DISAGREEMENT"]
        lines += [f"  {m}: {v}" for m, v in rec["methods"].items()]
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if rec["_agree"] else EXIT_DISAGREE), text


def _run_table(q: Query) -> tuple[int, str]:
    rs = build_root_system(q.type_label, q.rank)
    comps = sorted(all_compositions(rs.rank, rs.rank), reverse=True)
    records = [_compute_record(rs, c, q) for c in comps]
    agree = all(r["_agree"] for r in records)
    if q.fmt == "json":
        text = json.dumps([_public(r) for r in records]) + "\n"
    else:
        lines = []
        for r in records:
            comp = ",".join(map(str, r["composition"]))
            if r["_agree"]:
                lines.append(f"{comp}\t{r['value']}")
            else:
                lines.append(f"{comp}\tDISAGREEMENT " + " ".join(f"{m}={v}" for m, v in r["methods"].items()))
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if agree else EXIT_DISAGREE), text


def _run_diagrams(q: Query) -> tuple[int, str]:
    st = dg.setup(q.composition)
    ds = dg.enumerate_diagrams(st)
    value = dg.mixed_eulerian_diagrams(q.composition)
    fact = math.factorial(st.width)
    if q.fmt == "json":
        payload = {
            "composition": list(st.comp),
            "M": list(st.M),
            "J": list(st.J),
            "I": list(st.I),
            "diagrams": [
                {
                    "choices": [m.value for m in d.choices],
                    "weight": format_value(dg.weight(d)),
                    "summand": format_value(fact * dg.weight(d)),
                }
                for d in ds
            ],
            "value": format_value(value),
        }
        return EXIT_OK, json.dumps(payload) + "\n"
    if q.fmt == "svg":
        return EXIT_OK, "".join(dg.render_diagram(d, "svg") for d in ds)
    parts = [f"M={list(st.M)} J={list(st.J)} I={list(st.I)}\n"]
    for k, d in enumerate(ds, 1):
        parts.append(f"\nP_{k}  summand {format_value(fact * dg.weight(d))}\n")
        parts.append(dg.render_diagram(d, "ascii"))
    parts.append(f"\ntotal {format_value(value)}\n")
    return EXIT_OK, "".join(parts)


def mtable_rows(rs: RootSystem) -> list[dict]:
    rows = []
    for i, K, J in realizable_triples(rs):
        pair, ip = classify_pair(rs, K, J, i)
        looked = m_lookup(pair, ip)
        derived = m_derive(rs, i, K, J)
        rows.append(
            {
                "ambient": rs.name,
                "i": i,
                "K": list(vertices_of(K)),
                "J": list(vertices_of(J)),
                "pair": pair.name,
                "r": pair.r,
                "i_prime": ip,
                "table": format_value(looked),
                "derived": format_value(derived),
                "ok": looked == derived,
            }
        )
    return rows


def _run_mtable(q: Query) -> tuple[int, str]:
    rows = []
    for t in q.types or DEFAULT_MTABLE_TYPES:
        rows.extend(mtable_rows(parse_type(t)))
    ok = all(r["ok"] for r in rows)
    if q.fmt == "json":
        return (EXIT_OK if ok else EXIT_MISMATCH), json.dumps(rows) + "\n"
    lines = []
    for r in rows:
        K = "".join(map(str, r["K"])) if len(r["K"]) < 10 else ",".join(map(str, r["K"]))
        J = "".join(map(str, r["J"])) if len(r["J"]) < 10 else ",".join(map(str, r["J"]))
        flag = "ok" if r["ok"] else "MISMATCH"
        lines.append(
            f"{r['ambient']}\ti={r['i']}\tK={K}\tJ={J}\t{r['pair']} r={r['r']} i'={r['i_prime']}"
            f"\t{r['table']}\t{r['derived']}\t{flag}"
        )
    lines.append(f"{sum(r['ok'] for r in rows)}/{len(rows)} agree")
    return (EXIT_OK if ok else EXIT_MISMATCH), "\n".join(lines) + "\n"


def _run_volume(q: Query) -> tuple[int, str]:
    a = q.vector
    vol = permutohedron_volume(a, seed=q.seed)
    n = len(a)
    if n > 1:
        u = [a[k] - a[k + 1] for k in range(n - 1)]
        expansion = Fraction(0)
        for c in all_compositions(n - 1, n - 1):
            term = Fraction(mixed_eulerian(build_root_system("A", n - 1), c))
            for ui, ci in zip(u, c):
                term *= ui**ci / math.factorial(ci)
            expansion += term
    else:
        expansion = Fraction(1)
    agree = vol == expansion
    if q.fmt == "json":
        text = json.dumps({"vector": [format_value(x) for x in a], "volume": format_value(vol),
                           "expansion": format_value(expansion), "agree": agree}) + "\n"
    else:
        text = format_value(vol) + ("\n" if agree else f"\nDISAGREEMENT expansion={format_value(expansion)}\n")
    return (EXIT_OK if agree else EXIT_DISAGREE), text


def _run_verify(q: Query) -> tuple[int, str]:
    lines = []
    ok = True
    m_types = q.types or DEFAULT_MTABLE_TYPES
    for t in m_types:
        rows = mtable_rows(parse_type(t))
        good = sum(r["ok"] for r in rows)
        ok &= good == len(rows)
        lines.append(f"mtable {t}: {good}/{len(rows)} {'PASS' if good == len(rows) else 'FAIL'}")
    a_types = q.types or DEFAULT_APPENDIX_TYPES
    for t in a_types:
        rep = verify_appendix(parse_type(t))
        ok &= rep.ok
        lines.append(f"appendix {t}: {rep.passed}/{rep.total} {'PASS' if rep.ok else 'FAIL'}")
        for chk in rep.checks:
            if not chk.passed:
                lines.append(f"  failed: {chk.identity.describe()}")
    if q.fmt == "json":
        return (EXIT_OK if ok else EXIT_MISMATCH), json.dumps({"lines": lines, "ok": ok}) + "\n"
    return (EXIT_OK if ok else EXIT_MISMATCH), "\n".join(lines) + "\n"


_DISPATCH: dict[str, Callable[[Query], tuple[int, str]]] = {
    "compute": _run_compute,
    "table": _run_table,
    "diagrams": _run_diagrams,
    "mtable": _run_mtable,
    "volume": _run_volume,
    "verify": _run_verify,
}


def run(q: Query) -> tuple[int, str]:
    code, text = _DISPATCH[q.command](q)
    if q.out:
        with open(q.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        q = parse_args(sys.argv[1:] if argv is None else argv)
        code, text = run(q)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


__all__ = ["Query", "UsageError", "parse_args", "run", "main", "format_value", "mtable_rows"]
