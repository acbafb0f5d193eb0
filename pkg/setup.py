import json
import setuptools
try:
    from setuptools.command.test import test
except ImportError:
    # setuptools >= 72 dropped the test command entirely
    from setuptools import Command as test

from pathlib import Path


PKG_NAME = "chamberkit"
DESCRIPTION = "Exact arithmetic on symplectic classes of rational 4-manifolds: reduction, root systems, chamber faces and symplectomorphism invariants."
LICENSE = "MIT"

ROOT_DIR = Path(__file__).parent.resolve()
PACKAGE_DIR = ROOT_DIR / PKG_NAME

README = (ROOT_DIR / "README.md").read_text(encoding='utf-8', errors='ignore')
VERSION = json.loads((PACKAGE_DIR / "package.json").read_text().strip())['version']

PYTHON_REQUIRES = ">=3.8"
SETUP_REQUIRES = ["wheel"]
INSTALL_REQUIRES = [
    "mypy-extensions>=0.4.3",
    "sympy>=1.12",
    "networkx>=2.5",
]
EXTRAS_REQUIRE = {
    'dev': [
        "setuptools",
        "wheel",
        "flake8",
        "mypy",
        "pytest",
        "jsonschema>=3.2",
    ],
}


class DisabledTestCommand(test):
    user_options: list = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        # setup.py test is deprecated, disable it here by force
        print()
        print('[X] Running tests via setup.py test is deprecated.')
        print('    Hint: Use the ./bin/test.sh script or pytest instead')


setuptools.setup(
    name=PKG_NAME,
    version=VERSION,
    license=LICENSE,
    description=DESCRIPTION,
    long_description=README,
    long_description_content_type="text/markdown",
    python_requires=PYTHON_REQUIRES,
    setup_requires=SETUP_REQUIRES,
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    packages=setuptools.find_packages(include=[PKG_NAME, f'{PKG_NAME}.*']),
    package_data={PKG_NAME: ['package.json', 'mypy.ini', 'schemas/*.json']},
    entry_points={
        "console_scripts": [
            f"{PKG_NAME} = {PKG_NAME}.cli:main",
        ],
    },
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Development Status :: 4 - Beta",

        "Topic :: Scientific/Engineering :: Mathematics",

        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",

        "Environment :: Console",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Typing :: Typed",
    ],
    cmdclass={
        "test": DisabledTestCommand,
    },
)
