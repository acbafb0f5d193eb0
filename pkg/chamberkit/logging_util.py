__package__ = 'chamberkit'

import sys
import argparse

from pathlib import Path
from datetime import datetime, timezone
from dataclasses import dataclass, field
from typing import Dict, List, Optional, IO, Union, TYPE_CHECKING

if TYPE_CHECKING:
    from .invariants import Pi1Rank
    from .roots import DynkinType

from .errors import hints_of
from .util import enforce_types
from .config import (
    ConfigDict,
    VERSION,
    ANSI,
    stderr,
    hint,
)


USAGE_GRAMMAR = (
    'Forms are written (nu | c1, .., ck) or (mu, f | a1, .., an) with rationals like 1/3',
    'Classes are written like H - E1 - E2 or 2B + F - E1',
)


@dataclass
class RuntimeStats:
    """start times of the running phases, for the durations on the [√] lines"""

    started: Dict[str, datetime] = field(default_factory=dict)

# globals are bad, mmkay
_LAST_RUN_STATS = RuntimeStats()


class SmartFormatter(argparse.HelpFormatter):
    """Patched formatter that prints newlines in argparse help strings"""
    def _split_lines(self, text, width):
        if '\n' in text:
            return text.splitlines()
        return argparse.HelpFormatter._split_lines(self, text, width)


class CliParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit 1 and print the literal grammar"""

    def error(self, message):
        self.print_usage(sys.stderr)
        stderr(f'[X] {self.prog}: {message}', color='red')
        hint(USAGE_GRAMMAR)
        raise SystemExit(1)


def reject_stdin(caller: str, stdin: Optional[IO]=sys.stdin) -> None:
    """Tell the user they passed stdin to a command that doesn't accept it"""

    if not stdin:
        return None

    if not stdin.isatty():
        stdin_raw_text = stdin.read()
        if stdin_raw_text.strip():
            stderr(f'[!] The "{caller}" command does not accept stdin (ignoring).', color='red')
            stderr(f'    Run "{caller} --help" to see usage and examples.')
            stderr()
    return None


def accept_stdin(stdin: Optional[IO]=sys.stdin) -> Optional[str]:
    """accept any standard input and return it as a string or None"""

    if not stdin:
        return None

    if not stdin.isatty():
        stdin_str = stdin.read()
        if stdin_str:
            return stdin_str

    return None


def log_cli_command(subcommand: str, subcommand_args: List[str], stdin: Optional[str], pwd: str):
    cmd = ' '.join(('chamberkit', subcommand, *subcommand_args))
    stderr('{black}[i] [{now}] Chamberkit v{VERSION}: {cmd}{reset}'.format(
        now=datetime.now(timezone.utc).strftime('%Y-%m-%d %H:%M:%S'),
        VERSION=VERSION,
        cmd=cmd,
        **ANSI,
    ))
    stderr('{black}    > {pwd}{reset}'.format(pwd=pwd, **ANSI))
    stderr()


def _duration(seconds: float) -> str:
    if seconds > 60:
        return '{0:.2f} min'.format(seconds / 60)
    return '{0:.2f} sec'.format(seconds)


### Phases


def log_phase_started(phase: str, detail: str=''):
    start_ts = datetime.now(timezone.utc)
    _LAST_RUN_STATS.started[phase] = start_ts
    stderr('{green}[+] [{}] {}{}...{reset}'.format(
        start_ts.strftime('%Y-%m-%d %H:%M:%S'),
        phase.capitalize(),
        f' {detail}' if detail else '',
        **ANSI,
    ))


def log_phase_finished(phase: str, count: Optional[int]=None, what: str='items'):
    end_ts = datetime.now(timezone.utc)
    start_ts = _LAST_RUN_STATS.started.get(phase, end_ts)
    seconds = end_ts.timestamp() - start_ts.timestamp()

    stderr('{green}[√] [{}] {} finished ({}){reset}'.format(
        end_ts.strftime('%Y-%m-%d %H:%M:%S'),
        phase.capitalize(),
        _duration(seconds),
        **ANSI,
    ))
    if count is not None:
        stderr(f'    - {count} {what}')


def log_warning(message: str, hints=None):
    stderr(f'[!] {message}', color='lightyellow')
    if hints:
        hint(hints)


def log_error(err: Exception):
    stderr(f'[X] {getattr(err, "message", None) or err}', color='red')
    hints = hints_of(err)
    if hints:
        hint(hints)
    stderr()


def log_discrepancies(found: List[str]):
    if not found:
        return
    stderr()
    stderr(f'[!] {len(found)} printed value(s) disagree with the derived ones:', color='lightyellow')
    for line in found:
        stderr(f'    - {line}')


### Printables


def pretty_path(path: Union[Path, str]) -> str:
    """convert paths like .../chamberkit/../traces/abc into ./traces/abc"""
    pwd = Path('.').resolve()
    return str(path).replace(str(pwd) + '/', './')


@enforce_types
def printable_config(config: dict, prefix: str='') -> str:
    return f'\n{prefix}'.join(
        f'{key}={val}'
        for key, val in config.items()
        if not (isinstance(val, dict) or callable(val))
    )


def printable_dynkin(t: 'DynkinType') -> str:
    from .roots import weyl_order
    return f'{t} (|W| = {weyl_order(t)})'


def printable_rank(pi1: 'Pi1Rank') -> str:
    text = str(pi1)
    if pi1.certificate:
        text += f'  [{pi1.certificate}]'
    return text


__all__ = (
    'ConfigDict',
    'RuntimeStats',
    'SmartFormatter',
    'CliParser',
)
