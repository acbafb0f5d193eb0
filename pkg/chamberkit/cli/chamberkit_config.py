#!/usr/bin/env python3

__package__ = 'chamberkit.cli'
__command__ = 'chamberkit config'

import sys

from typing import Optional, List, IO

from ..main import config
from ..util import docstring
from ..config import OUTPUT_DIR
from ..logging_util import CliParser, SmartFormatter, accept_stdin


@docstring(config.__doc__)
def main(args: Optional[List[str]]=None, stdin: Optional[IO]=None, pwd: Optional[str]=None) -> None:
    parser = CliParser(
        prog=__command__,
        description=config.__doc__,
        add_help=True,
        formatter_class=SmartFormatter,
    )
    parser.add_argument(
        '--get',
        action='store_true',
        help="Get the value for the given config KEYs",
    )
    parser.add_argument(
        'config_options',
        nargs='*',
        type=str,
        help='KEY names to print (all keys when none are given)',
    )
    command = parser.parse_args(args or ())

    config_options = command.config_options
    if not config_options:
        config_options = (accept_stdin(stdin) or '').split()

    config(
        config_options=config_options,
        get=command.get,
        out_dir=pwd or OUTPUT_DIR,
    )


if __name__ == '__main__':
    main(args=sys.argv[1:], stdin=sys.stdin)
