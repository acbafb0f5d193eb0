__package__ = 'chamberkit.report'

from typing import Any

from ..util import enforce_types
from ..invariants import SympReport, TableDocument
from .json import generate_json_report
from .markdown import report_to_markdown, table_to_markdown, q_table_to_markdown
from .text import report_to_text, table_to_text, q_table_to_text


TEXT = 'text'
MARKDOWN = 'markdown'
JSON = 'json'

FORMATS = (TEXT, MARKDOWN, JSON)


@enforce_types
def render_report(report: SympReport, fmt: str=TEXT, with_headers: bool=False) -> str:
    if fmt == JSON:
        return generate_json_report(report, kind='report', with_headers=with_headers)
    if fmt == MARKDOWN:
        return report_to_markdown(report)
    return report_to_text(report)


@enforce_types
def render_table(doc: TableDocument, fmt: str=TEXT, compare: bool=False, with_headers: bool=False) -> str:
    if fmt == JSON:
        return generate_json_report(doc, kind='table', with_headers=with_headers)
    if fmt == MARKDOWN:
        return table_to_markdown(doc, compare=compare)
    return table_to_text(doc, compare=compare)


@enforce_types
def render_q_table(rows: list, fmt: str=TEXT, with_headers: bool=False) -> str:
    if fmt == JSON:
        return generate_json_report(rows, kind='q', with_headers=with_headers)
    if fmt == MARKDOWN:
        return q_table_to_markdown(rows)
    return q_table_to_text(rows)


def render_json(payload: Any, kind: str, with_headers: bool=False) -> str:
    return generate_json_report(payload, kind=kind, with_headers=with_headers)
