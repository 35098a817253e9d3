"""Report rendering: CSV (15 significant digits) and schema-versioned JSON."""

from __future__ import annotations

import json

SCHEMA_VERSION = 1


def format_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.15g}"
    text = str(v)
    if "," in text or '"' in text or "\n" in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


def render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(format_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(command: str, config: dict, header: list[str], rows: list[list]) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config,
        "rows": [dict(zip(header, row)) for row in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
