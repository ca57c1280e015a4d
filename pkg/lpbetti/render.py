"""
render.py - Text, CSV and JSON output for tables, multidegree listings and reports.

The text layout follows the usual Betti diagram: rows are strands j - i,
columns homological degrees i, "." marks a zero, and a total row comes first.
"""

from typing import Dict, Iterable, Tuple

import pandas as pd

from .betti_table import BettiTable
from .hochster import Multidegree
from .poset import Poset
from .report import Report

FORMATS = ('text', 'csv', 'json')


def table_to_text(table: BettiTable) -> str:
    frame = table.to_frame()
    if frame.empty:
        return "(zero table)\n"
    columns = list(frame.columns)
    totals = frame.sum(axis=0)
    labels = [f"{strand}:" for strand in frame.index]
    label_width = max(len("total:"), *(len(label) for label in labels))

    def cell(value):
        return "." if value == 0 else str(int(value))

    widths = []
    for column in columns:
        texts = [str(column), str(int(totals[column]))] + [cell(v) for v in frame[column]]
        widths.append(max(len(text) for text in texts))

    lines = [" " * (label_width + 1) + " ".join(str(c).rjust(w) for c, w in zip(columns, widths))]
    lines.append("total:".rjust(label_width) + " "
                 + " ".join(str(int(totals[c])).rjust(w) for c, w in zip(columns, widths)))
    for label, (_, row) in zip(labels, frame.iterrows()):
        lines.append(label.rjust(label_width) + " "
                     + " ".join(cell(row[c]).rjust(w) for c, w in zip(columns, widths)))
    return "\n".join(lines) + "\n"


def table_to_csv(table: BettiTable) -> str:
    return pd.DataFrame(table.to_records(), columns=['i', 'j', 'beta']).to_csv(index=False)


def render_table(table: BettiTable, fmt: str = 'text', convention: str = 'ideal') -> str:
    """
    Renders a table in the requested format and convention.

    Args:
        table (BettiTable): Table in either convention
        fmt (str): 'text', 'csv' or 'json'
        convention (str): 'ideal' or 'quotient'

    Returns:
        str: The rendered output, newline terminated
    """
    table = table.in_convention(convention)
    if fmt == 'csv':
        return table_to_csv(table)
    if fmt == 'json':
        return table.to_json() + "\n"
    return table_to_text(table)


def render_multigraded(P: Poset, pairs: Iterable[Tuple[Multidegree, Dict[int, int]]]) -> str:
    """One line 'i | R_1;...;R_n | beta' per nonzero multigraded Betti number."""
    lines = []
    for R, betti in pairs:
        layers = R.format(P)
        for i in sorted(betti):
            lines.append(f"{i} | {layers} | {betti[i]}")
    return "\n".join(lines) + ("\n" if lines else "")


def render_report(report: Report) -> str:
    frame = report.to_frame()
    frame['status'] = frame['status'].str.upper()
    verdict = "all checks passed" if report.passed else f"{len(report.failures)} check(s) failed"
    return frame.to_string(index=False) + "\n" + verdict + "\n"


def render_summary(summary: dict) -> str:
    width = max(len(key) for key in summary)
    return "\n".join(f"{key.ljust(width)} : {value}" for key, value in summary.items()) + "\n"


def render_poset_list(rows: Iterable[dict]) -> str:
    frame = pd.DataFrame(list(rows), columns=['name', 'elements', 'width', 'forest', 'status'])
    return frame.to_string(index=False) + "\n"
