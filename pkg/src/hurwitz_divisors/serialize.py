"""Chain-data files and table emission in json, csv and tex.

Chain-data file (JSON)::

    {
      "d": 3, "g": 4,                      # optional, checked when present
      "strata": [
        {"j": 2, "mu": "2,1", "m": 2,
         "c": 0,                           # or "n", "r", "dotP2"
         "delta": ["0", "0", "0"],
         "e": ["1", "1/2", "0"]}
      ]
    }

``j`` may be given as either representative; it is canonicalized.  Omitted
``m``, ``delta`` or ``e`` fall back to the default conventions and are marked
as such in the provenance.  Rationals are strings ``"p/q"`` or integers.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from hurwitz_divisors.boundary import (
    DEFAULT_PROVENANCE,
    ChainData,
    Partition,
    SigmaRow,
    canonicalize,
    chain_constant,
    default_chain_length,
    default_delta,
    default_e,
)
from hurwitz_divisors.coverclass import CoverClass


class ChainFileError(ValueError):
    pass


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ChainFileError(f"rational must be an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ChainFileError(f"malformed rational {x!r}") from None


def _entry_chain(entry: Mapping[str, Any], mu: Partition, d: int) -> ChainData:
    provenance = {}
    if "m" in entry:
        m = entry["m"]
        if isinstance(m, bool) or not isinstance(m, int):
            raise ChainFileError(f"m must be an integer, got {m!r}")
        provenance["m"] = "file"
    else:
        m = default_chain_length(mu)
        provenance["m"] = DEFAULT_PROVENANCE["m"]

    if "delta" in entry:
        delta = tuple(parse_rational(x) for x in entry["delta"])
        provenance["delta"] = "file"
    else:
        delta = default_delta(m)
        provenance["delta"] = DEFAULT_PROVENANCE["delta"]

    if "e" in entry:
        e = tuple(parse_rational(x) for x in entry["e"])
        provenance["e"] = "file"
    else:
        e = default_e(m)
        provenance["e"] = DEFAULT_PROVENANCE["e"]

    if "c" in entry:
        c = int(entry["c"])
    elif all(key in entry for key in ("n", "r", "dotP2")):
        c = chain_constant(d, int(entry["n"]), int(entry["r"]), int(entry["dotP2"]))
    else:
        c = None
    try:
        return ChainData(m, delta, e, c, provenance)
    except ValueError as exc:
        raise ChainFileError(str(exc)) from None


def parse_chain_document(doc: Mapping[str, Any], cc: CoverClass) -> dict[str, ChainData]:
    """Map canonical stratum keys ``"j:mu"`` to chain data."""
    for key in ("d", "g"):
        if key in doc and doc[key] != getattr(cc, key):
            raise ChainFileError(f"chain file is for {key}={doc[key]}, not {getattr(cc, key)}")
    entries = doc.get("strata")
    if not isinstance(entries, list):
        raise ChainFileError("chain file needs a list under 'strata'")
    out: dict[str, ChainData] = {}
    for entry in entries:
        try:
            mu_field = entry["mu"]
            mu = (
                Partition.parse(mu_field)
                if isinstance(mu_field, str)
                else Partition(tuple(sorted(mu_field, reverse=True)))
            )
            label = canonicalize(int(entry["j"]), mu, cc.b)
        except (KeyError, TypeError, ValueError) as exc:
            raise ChainFileError(f"bad stratum entry {entry!r}: {exc}") from None
        if mu.d != cc.d:
            raise ChainFileError(f"partition {mu} is not a partition of d={cc.d}")
        if label.key in out:
            raise ChainFileError(f"duplicate entry for stratum {label.key}")
        out[label.key] = _entry_chain(entry, mu, cc.d)
    return out


def load_chain_file(path: str | Path, cc: CoverClass) -> dict[str, ChainData]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ChainFileError(f"{path}: not valid JSON ({exc})") from None
    return parse_chain_document(doc, cc)


TABLE_COLUMNS = ("j", "mu", "m", "sigma", "provenance")


def table_records(rows: Iterable[SigmaRow]) -> list[dict[str, Any]]:
    return [
        {
            "j": r.label.j,
            "mu": str(r.label.mu),
            "m": r.chain.m,
            "sigma": format_rational(r.sigma),
            "provenance": r.provenance,
        }
        for r in rows
    ]


def _cell_json(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return value


def _cell_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return str(value)


def emit_json(records: Sequence[Mapping[str, Any]], meta: Mapping[str, Any]) -> str:
    doc = dict(meta)
    doc["rows"] = [{k: _cell_json(v) for k, v in rec.items()} for rec in records]
    return json.dumps(doc, indent=2) + "\n"


def emit_csv(records: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([_cell_text(rec.get(col)) for col in columns])
    return buf.getvalue()


_TEX_ESCAPES = {"_": r"\_", "&": r"\&", "%": r"\%", "#": r"\#"}


def _tex(text: str) -> str:
    return "".join(_TEX_ESCAPES.get(ch, ch) for ch in text)


def emit_tex(records: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    lines = [r"\begin{tabular}{" + "l" * len(columns) + "}", r"\hline"]
    lines.append(" & ".join(_tex(c) for c in columns) + r" \\")
    lines.append(r"\hline")
    for rec in records:
        cells = []
        for col in columns:
            text = _tex(_cell_text(rec.get(col)))
            if col in ("sigma", "mu") and text:
                text = f"${text}$"
            cells.append(text)
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def emit(
    records: Sequence[Mapping[str, Any]],
    columns: Sequence[str],
    fmt: str,
    meta: Mapping[str, Any] | None = None,
) -> str:
    if fmt == "json":
        return emit_json(records, meta or {})
    if fmt == "csv":
        return emit_csv(records, columns)
    if fmt == "tex":
        return emit_tex(records, columns)
    raise ValueError(f"unknown format {fmt!r}")


def parse_table_json(text: str) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    doc = json.loads(text)
    rows = doc.pop("rows")
    return doc, rows


def parse_table_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def normalize_table(records: Iterable[Mapping[str, Any]]) -> list[tuple]:
    """Typed view of table rows for comparing json and csv emissions."""
    return [
        (int(r["j"]), str(r["mu"]), int(r["m"]), Fraction(r["sigma"]), str(r["provenance"]))
        for r in records
    ]
