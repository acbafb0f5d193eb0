#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit table'

import sys

from typing import Optional, List, IO

from ..main import table
from ..util import docstring
from ..report import JSON, MARKDOWN, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(table.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=table.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the table as JSON",
    )
    group.add_argument(
        '--markdown', '-m',
        action='store_true',
        help="Print the table as markdown",
    )
    parser.add_argument(
        '--compare-published', '--paper-compare',
        dest='compare',
        action='store_true',
        help='Add the printed Γ_L, N and π₁ columns beside the derived ones and flag disagreements',
    )
    parser.add_argument(
        '--with-headers',
        action='store_true',
        help='Wrap JSON output in the info/schema/meta header block',
    )
    parser.add_argument(
        'which',
        type=str,
        help='k = 2..5 for the faces of the reduced cone of CP2#k, or q for the Q summary',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    table(
        which=command.which,
        fmt=JSON if command.json else (MARKDOWN if command.markdown else TEXT),
        compare=command.compare,
        with_headers=command.with_headers,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
