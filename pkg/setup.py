from setuptools import setup

from typing import Dict, Any

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

SETUP_ARGS: Dict[str, Any] = dict(
    name='pfaffschub',  # Required
    version='0.1',  # Required
    description='Gröbner geometry of skew-symmetric matrix Schubert varieties',  # Required
    long_description=long_description,
    long_description_content_type="text/markdown",
    author='EPAM Systems',  # Optional

    # Note that this is a string of words separated by whitespace, not a list.
    keywords='groebner pfaffian schubert pipe-dreams involutions combinatorics',
    packages=[
        "pfaffschub",
        "pfaffschub.suites",
    ],  # Required
    install_requires=[
        'importlib_metadata',
        'packaging',
        'pyaml',
        'sympy',
    ],
    python_requires=">=3.7",
    entry_points={'console_scripts': ['pfaffschub = pfaffschub.main:pfaffschub_entry']})
setup(**SETUP_ARGS)
