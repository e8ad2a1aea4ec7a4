"""Deterministic experiment reports with table, CSV and JSON output."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    rows: list = field(default_factory=list)

    @property
    def checksum(self) -> str:
        payload = _canonical({"experiment": self.experiment, "params": self.params, "rows": self.rows})
        return hashlib.sha256(payload.encode()).hexdigest()

    @property
    def columns(self) -> list:
        cols = []
        for row in self.rows:
            for key in row:
                if key not in cols:
                    cols.append(key)
        return cols

    def to_record(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "rows": self.rows,
            "checksum": self.checksum,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()

    def to_table(self) -> str:
        cols = self.columns
        cells = [[_cell(row.get(c)) for c in cols] for row in self.rows]
        widths = [max([len(c)] + [len(r[k]) for r in cells]) for k, c in enumerate(cols)]
        lines = [f"# {self.experiment} " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        for r in cells:
            lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
        lines.append(f"# checksum {self.checksum}")
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)
