#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit reduce'

import sys

from typing import Optional, List, IO

from ..main import reduce
from ..util import docstring
from ..report import JSON, TEXT
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(reduce.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=reduce.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        '--normalize', '-n',
        action='store_true',
        help='Scale the reduced form so that H (or F) has area 1',
    )
    parser.add_argument(
        '--trace', '-t',
        type=str,
        default=None,
        metavar='FILE',
        help='Write the trace (START, PERMUTE/REFLECT/NEGATE/BASIS/SCALE steps, END) to FILE',
    )
    parser.add_argument(
        '--oracle',
        action='store_true',
        help='Also find the chamber point by breadth-first search of the Weyl orbit',
    )
    parser.add_argument(
        '--json', '-j',
        action='store_true',
        help="Print the input, reduced form and trace as JSON",
    )
    parser.add_argument(
        'form',
        type=str,
        help='Symplectic form, e.g. "(3 | 2, 1, 1/2)" or "(1, 3 | 1/2)"',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    reduce(
        form=command.form,
        normalize=command.normalize,
        trace_file=command.trace,
        oracle=command.oracle,
        fmt=JSON if command.json else TEXT,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
