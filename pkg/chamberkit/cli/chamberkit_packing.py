#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit packing'

import sys

from typing import Optional, List, IO

from ..main import packing
from ..util import docstring
from ..report import JSON, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(packing.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=packing.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        '--cremona',
        action='store_true',
        help=(
            'Treat the sizes as the reduced balanced form (1 | c1, .., c5) and\n'
            'apply the Cremona move before deciding the packing'
        ),
    )
    parser.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the certificate, slack and Cremona checks as JSON",
    )
    parser.add_argument(
        'sizes',
        nargs=5,
        type=str,
        help='Five ball sizes as rationals relative to a line of area 1',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    packing(
        sizes=command.sizes,
        cremona=command.cremona,
        fmt=JSON if command.json else TEXT,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
