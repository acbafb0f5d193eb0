#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit verify-trace'

import sys

from typing import Optional, List, IO

from ..main import verify_trace
from ..util import docstring
from ..logging_util import CliParser, SmartFormatter, reject_stdin


@docstring(verify_trace.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=verify_trace.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        'path',
        type=str,
        help='Trace file written by chamberkit reduce --trace',
    )
    command = parser.parse_args(args or ())
    reject_stdin(__command__, stdin)

    verify_trace(path=command.path)


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
