#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit roots'

import sys

from typing import Optional, List, IO

from ..main import roots
from ..util import docstring
from ..report import JSON, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(roots.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=roots.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '--exceptional', '-e',
        action='store_true',
        help='List the exceptional (-1) classes instead of the roots',
    )
    group.add_argument(
        '--positive', '-p',
        action='store_true',
        help='Only list the roots of positive area on the interior reference form',
    )
    parser.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the classes, their count and degree census as JSON",
    )
    parser.add_argument(
        'k',
        type=int,
        help='Number of blow ups, 1..8',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    roots(
        k=command.k,
        exceptional=command.exceptional,
        positive=command.positive,
        fmt=JSON if command.json else TEXT,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
