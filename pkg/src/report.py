"""
report.py
---------

Description:
    Turns results (spectra, bounds, verification reports, character tables,
    Ramanujan tables) into pandas DataFrames and renders them as JSON, CSV
    or an aligned text table. Used by the command line and the dashboard.

This program:
    Builds one DataFrame per result type with a fixed column order.
    Renders JSON from the result's own to_dict() so machine output follows
    the documented schema exactly.
    Saves a timestamped CSV copy into the reports folder on request.
"""

import json
import os
from datetime import datetime

import pandas as pd

from src import config
from src.errors import InvalidInput

FORMATS = ("table", "json", "csv")


def format_complex(z, digits=6):
    """Compact text for a character value."""
    z = complex(z)
    re = 0.0 if abs(z.real) < 1e-12 else z.real
    im = 0.0 if abs(z.imag) < 1e-12 else z.imag
    if im == 0.0:
        return f"{re:.{digits}g}"
    if re == 0.0:
        return f"{im:.{digits}g}i"
    return f"{re:.{digits}g}{im:+.{digits}g}i"


def spectrum_frame(spec):
    return pd.DataFrame(
        [{"value": p.value, "multiplicity": p.multiplicity, "exact": p.exact} for p in spec.pairs],
        columns=["value", "multiplicity", "exact"],
    )


def bound_frame(report):
    data = report.to_dict()
    columns = ["order", "claimed", "oracle_max_multiplicity", "consistent", "effective_bound", "mr_upper", "kind"]
    return pd.DataFrame([{c: data[c] for c in columns}], columns=columns)


def divisor_frame(report):
    columns = ["divisor", "eigenvalue", "multiplicity", "pooled", "bound"]
    return pd.DataFrame(report.to_dict(per_divisor=True)["per_divisor"], columns=columns)


def bound_divisor_frame(report):
    """One row per divisor with the bound columns repeated, so the CSV is a single table."""
    bound = bound_frame(report).iloc[0].to_dict()
    divisors = divisor_frame(report)
    for column in reversed(list(bound)):
        divisors.insert(0, column, [bound[column]] * len(divisors))
    return divisors


def verification_frame(report):
    columns = ["value", "closed_multiplicity", "oracle_multiplicity"]
    return pd.DataFrame(report.to_dict()["multiplicity_mismatches"], columns=columns)


def ramanujan_frame(rows):
    columns = ["r", "hoelder"] + (["direct"] if rows and "direct" in rows[0] else [])
    return pd.DataFrame(rows, columns=columns)


def character_frame(table):
    elements = table.group.elements()
    labels = [table.group.label(g) for g in elements]
    records = []
    for i, c in enumerate(table.characters):
        row = {"character": c.label, "degree": c.degree}
        for label, g in zip(labels, elements):
            row[label] = format_complex(table.value(i, g))
        records.append(row)
    return pd.DataFrame(records, columns=["character", "degree"] + labels)


def render(document, frame, fmt):
    """
    document is the JSON-ready dict, frame the tabular view of the same
    result. Returns the text to print.
    """
    if fmt == "json":
        return json.dumps(document, indent=2)
    if fmt == "csv":
        return frame.to_csv(index=False).rstrip("\n")
    if fmt == "table":
        return frame.to_string(index=False)
    raise InvalidInput(f"unknown output format '{fmt}' (choose from {', '.join(FORMATS)})")


def save_frame(frame, name, folder=None):
    """
    Saves a DataFrame as reports/<name>_<timestamp>.csv and returns the path.
    """
    folder = folder or config.REPORTS_DIR
    os.makedirs(folder, exist_ok=True)
    filename = os.path.join(folder, f"{name}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.csv")
    frame.to_csv(filename, index=False)
    return filename
