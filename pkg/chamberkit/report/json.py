__package__ = 'chamberkit.report'

from typing import Any

from ..util import enforce_types, to_json
from ..config import VERSION, SCHEMA_FILENAME


REPORT_HEADER = {
    'info': 'Invariants of symplectomorphism groups of rational 4-manifolds computed by chamberkit.',
    'schema': f'chamberkit.{SCHEMA_FILENAME}',
    'meta': {
        'project': 'chamberkit',
        'version': VERSION,
    },
}


@enforce_types
def generate_json_report(payload: Any, kind: str, with_headers: bool=False) -> str:
    """serialize a report, table or listing, wrapped in the header block if asked"""
    if with_headers:
        output = {
            **REPORT_HEADER,
            'kind': kind,
            kind: payload,
        }
    else:
        output = payload
    return to_json(output, indent=4, sort_keys=True)
