#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit braid'

import sys

from typing import Optional, List, IO

from ..main import braid
from ..util import docstring
from ..report import JSON, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(braid.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=braid.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        '--no-quotient',
        dest='quotient',
        action='store_false',
        help='Keep the full twist instead of setting it to 1',
    )
    parser.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the results as JSON",
    )
    parser.add_argument(
        'action',
        choices=('abelianize', 'span', 'word'),
        help=(
            'abelianize: free rank and torsion of the abelianization\n'
            'span:       do the listed generators span the abelianization\n'
            'word:       abelian image of a word and whether it vanishes'
        ),
    )
    parser.add_argument(
        'n',
        type=int,
        help='Number of strands, n >= 3',
    )
    parser.add_argument(
        'rest',
        nargs='*',
        type=str,
        help='Generators like A24 A25 (span) or a word like A14A24A34A45 (word)',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    braid(
        action=command.action,
        n=command.n,
        rest=command.rest,
        quotient=command.quotient,
        fmt=JSON if command.json else TEXT,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
