import csv
import io
import json

from ..fields import parse_element


def output_format(options):
    if getattr(options, "json", False):
        return "json"
    if getattr(options, "csv", False):
        return "csv"
    return "markdown"


def render_rows(headers, rows, fmt="markdown"):
    """Render rows (sequences aligned with `headers`) as a Markdown table, CSV or JSON."""
    if fmt == "markdown":
        lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
        lines += ["| " + " | ".join(str(cell) for cell in row) + " |" for row in rows]
        return "\n".join(lines)
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    elif fmt == "json":
        return json.dumps([dict(zip(headers, row)) for row in rows], indent=2)
    else:
        raise ValueError(f"Unsupported output format: {fmt}")


def yes_no(value):
    if value is None:
        return "?"
    return "y" if value else "n"


def parse_coefficient_list(text, field):
    if text is None:
        return [field.GF(value) for value in range(field.order)]
    elements = []
    position = 0
    for part in text.split(","):
        if part.strip():
            elements.append(parse_element(part, field, position))
        position += len(part) + 1
    return elements
