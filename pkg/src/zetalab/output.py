"""CSV and run-manifest emission with a pinned text dialect.

Dialect: comma separated, '.' decimal point, header row, LF endings, reals
at 12 significant digits.  Pinning the dialect is what makes golden-file
comparisons meaningful.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


def fmt_real(x: float) -> str:
    """12 significant digits, no exponent surprises for typical magnitudes."""
    return format(float(x), ".12g")


def format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return fmt_real(value)


def write_csv(dest, header, rows) -> None:
    """Emit to a path or to an already-open text stream."""
    if hasattr(dest, "write"):
        _write_rows(dest, header, rows)
        return
    with open(dest, "w", encoding="utf-8", newline="\n") as fh:
        _write_rows(fh, header, rows)


def _write_rows(fh, header, rows) -> None:
    fh.write(",".join(str(h) for h in header) + "\n")
    for row in rows:
        fh.write(",".join(format_cell(c) for c in row) + "\n")


@dataclass
class RunManifest:
    """Everything needed to rerun a command and get the same bytes back."""

    subcommand: str
    parameters: dict = field(default_factory=dict)
    zeros_source: str = ""
    zeros_used: int = 0
    tool_version: str = ""

    def write(self, out_path) -> str:
        """Write alongside ``out_path`` and return the manifest path."""
        dest = str(out_path) + ".manifest.json"
        payload = asdict(self)
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return dest
