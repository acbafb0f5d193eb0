import os
import random

import pytest


@pytest.hookimpl
def pytest_sessionstart(session):
    # forced before chamberkit.config is first imported
    os.environ['USE_COLOR'] = 'False'
    os.environ.setdefault('SAMPLE_SEED', '0')
    random.seed(0)
