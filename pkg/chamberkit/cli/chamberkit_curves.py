#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit curves'

import sys

from typing import Optional, List, IO

from ..main import curves
from ..util import docstring
from ..report import JSON, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(curves.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=curves.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        '--families', '-f',
        action='store_true',
        help='List the negative spheres of the B, F and E families (the default)',
    )
    parser.add_argument(
        '--square-zero', '-z',
        action='store_true',
        help='List the square zero sphere classes of the manifold',
    )
    parser.add_argument(
        '--audit', '-a',
        type=int,
        default=None,
        metavar='BOUND',
        help='Brute force every class with coefficients up to BOUND and check the simple-class conclusions',
    )
    parser.add_argument(
        '--configuration', '-c',
        action='store_true',
        help='Check which negative classes the minimal J_open configuration cuts out',
    )
    parser.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the results as JSON",
    )
    parser.add_argument(
        'form',
        type=str,
        help='Symplectic form in either basis, e.g. "(2, 1 | 1/2, 1/4)" or "(1 | 1/2, 1/3)"',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    curves(
        form=command.form,
        families=command.families,
        square_zero=command.square_zero,
        audit=command.audit,
        configuration=command.configuration,
        fmt=JSON if command.json else TEXT,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
