__package__ = 'chamberkit.report'

from typing import List, Optional, Sequence

from ..util import enforce_types
from ..invariants import SympReport, TableDocument, QRow
from ..published import published_row
from ..logging_util import printable_dynkin, printable_rank


@enforce_types
def rows_to_text(cols: List[str], rows: List[List[str]], separator: str='  ', header: bool=True) -> str:
    widths = [
        max(len(str(cell)) for cell in (col, *(row[i] for row in rows)))
        for i, col in enumerate(cols)
    ]
    header_str = separator.join(col.ljust(width) for col, width in zip(cols, widths))
    row_strs = (
        separator.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    )
    return '\n'.join((header_str.rstrip(), *row_strs) if header else row_strs)


def table_columns(compare: bool) -> List[str]:
    cols = ['label', 'Γ_L', 'N', 'π₁', 'conditions']
    if compare:
        cols += ['printed Γ_L', 'printed N', 'printed π₁', 'flag']
    return cols


def table_row(report: SympReport, compare: bool) -> List[str]:
    assert report.face is not None
    row = [report.face.label, str(report.gamma_L), str(report.N), str(report.pi1), report.face.conditions]
    if compare:
        printed = published_row(report.face.k, report.face.label)
        row += [
            printed.gamma_L if printed else '',
            str(printed.N) if printed else '',
            '' if printed is None or printed.pi1_rank is None else str(printed.pi1_rank),
            '!' if report.paper_discrepancies else '',
        ]
    return row


@enforce_types
def table_to_text(doc: TableDocument, compare: bool=False) -> str:
    cols = table_columns(compare)
    return rows_to_text(cols, [table_row(report, compare) for report in doc.rows])


@enforce_types
def q_table_to_text(rows: list) -> str:
    return rows_to_text(
        ['manifold', 'Q', 'printed', 'note'],
        [q_row(row) for row in rows],
    )


def q_row(row: QRow) -> List[str]:
    derived = '?' if row.derived is None else str(row.derived)
    note = 'conjectural, MA only has bounds' if row.conjectural else ''
    return [row.manifold, derived, row.published, note]


def _lines(pairs: Sequence[tuple]) -> str:
    width = max(len(key) for key, _ in pairs)
    return '\n'.join(f'{key.ljust(width)}  {value}' for key, value in pairs if value is not None)


@enforce_types
def report_to_text(report: SympReport, trace: Optional[bool]=False) -> str:
    pairs = [
        ('manifold', report.manifold),
        ('input', report.input.to_literal()),
        ('reduced', report.reduced.to_literal()),
        ('face', report.label),
        ('conditions', report.face.conditions if report.face else None),
        ('Γ_L', printable_dynkin(report.gamma_L)),
        ('N', str(report.N)),
        ('N_L', str(report.N_L)),
        ('torelli', report.pi0.torelli),
        ('π₀', report.pi0.exact_sequence_note),
        ('π₁', printable_rank(report.pi1)),
        ('Q', '?' if report.Q is None else str(report.Q)),
        ('flags', ', '.join(report.flags) or None),
        ('printed', '; '.join(report.paper_discrepancies) or None),
    ]
    text = _lines(pairs)
    if trace and report.trace is not None:
        text += '\n\n' + report.trace.render()
    return text
