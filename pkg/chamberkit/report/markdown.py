__package__ = 'chamberkit.report'

from typing import List

from ..util import enforce_types
from ..invariants import SympReport, TableDocument
from .text import table_columns, table_row, q_row


def _escape(cell: str) -> str:
    return str(cell).replace('|', '\\|')


@enforce_types
def rows_to_markdown(cols: List[str], rows: List[List[str]]) -> str:
    lines = [
        '| ' + ' | '.join(_escape(col) for col in cols) + ' |',
        '|' + '|'.join('---' for _ in cols) + '|',
    ]
    lines += ['| ' + ' | '.join(_escape(cell) for cell in row) + ' |' for row in rows]
    return '\n'.join(lines)


@enforce_types
def table_to_markdown(doc: TableDocument, compare: bool=False) -> str:
    body = rows_to_markdown(table_columns(compare), [table_row(report, compare) for report in doc.rows])
    title = f'### Faces of the reduced cone of CP2#{doc.k}\n\n'
    if compare and doc.discrepancies:
        notes = '\n'.join(f'- {line}' for line in doc.discrepancies)
        return f'{title}{body}\n\nPrinted values that disagree with the derived ones:\n\n{notes}'
    return title + body


@enforce_types
def q_table_to_markdown(rows: list) -> str:
    return rows_to_markdown(['manifold', 'Q', 'printed', 'note'], [q_row(row) for row in rows])


@enforce_types
def report_to_markdown(report: SympReport) -> str:
    rows = [
        ['manifold', report.manifold],
        ['input', f'`{report.input.to_literal()}`'],
        ['reduced', f'`{report.reduced.to_literal()}`'],
        ['face', report.label or ''],
        ['Γ_L', str(report.gamma_L)],
        ['N', str(report.N)],
        ['N_L', str(report.N_L)],
        ['torelli', report.pi0.torelli],
        ['π₁', str(report.pi1)],
        ['Q', '?' if report.Q is None else str(report.Q)],
    ]
    if report.flags:
        rows.append(['flags', ', '.join(report.flags)])
    return rows_to_markdown(['field', 'value'], rows)
