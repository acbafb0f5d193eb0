#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit analyze'

import sys

from typing import Optional, List, IO

from ..main import analyze
from ..util import docstring
from ..report import JSON, MARKDOWN, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(analyze.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=analyze.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the report as JSON (validates against chamberkit/schemas/report-v1.json)",
    )
    group.add_argument(
        '--markdown', '-m',
        action='store_true',
        help="Print the report as a markdown table",
    )
    parser.add_argument(
        '--with-headers',
        action='store_true',
        help='Wrap JSON output in the info/schema/meta header block',
    )
    parser.add_argument(
        '--trace',
        action='store_true',
        help='Append the Cremona moves of the reduction to text output',
    )
    parser.add_argument(
        'form',
        type=str,
        help=(
            'Symplectic form to analyze, e.g.:\n'
            '    "(1 | 1/3, 1/3, 1/3)"      nu H - c1 E1 - .. on CP2#k\n'
            '    "(2, 1 | 1/2, 1/4)"        mu B + f F - a1 E1 - .. on S2xS2#n'
        ),
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    analyze(
        form=command.form,
        fmt=JSON if command.json else (MARKDOWN if command.markdown else TEXT),
        with_headers=command.with_headers,
        show_trace=command.trace,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
