import os
import sys
import shutil
import random
import subprocess

from pathlib import Path

import pytest

ROOT_DIR = Path(__file__).resolve().parent.parent


def chamberkit_cmd():
    """the installed console script, or the package module from this checkout"""
    if shutil.which('chamberkit'):
        return ['chamberkit']
    return [sys.executable, '-m', 'chamberkit']


@pytest.fixture
def cli_env():
    env = os.environ.copy()
    env.update({
        'USE_COLOR': 'False',
        'PYTHONIOENCODING': 'utf-8',
        'PYTHONPATH': os.pathsep.join(filter(None, (str(ROOT_DIR), env.get('PYTHONPATH')))),
    })
    return env


@pytest.fixture
def run(tmp_path, cli_env):
    os.chdir(tmp_path)

    def run_chamberkit(*args, env=None):
        return subprocess.run(
            [*chamberkit_cmd(), *args],
            capture_output=True,
            stdin=subprocess.DEVNULL,
            env=env or cli_env,
        )
    return run_chamberkit


@pytest.fixture
def rng():
    return random.Random(0)
