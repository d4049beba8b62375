#!/usr/bin/env python3

import re

from setuptools import (
    setup as install,
    find_packages,
)

# Parses version number: https://stackoverflow.com/a/7071358
VERSIONFILE = 'edo/_version.py'
verstrline = open(VERSIONFILE, "rt").read()
VSRE = r"^__version__ = ['\"]([^'\"]*)['\"]"
mo = re.search(VSRE, verstrline, re.M)
if mo:
    VERSION = mo.group(1)
else:
    raise RuntimeError('Unable to find version string in %s.' % (VERSIONFILE,))

# Installs the package
install(
    name='edo',
    packages=find_packages(exclude=['tests', 'tests.*']),
    version=VERSION,
    description='Evolutionary dataset optimisation for studying clustering algorithms',
    long_description=open('README.md', encoding='utf8').read(),
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.17.0',
        'scipy>=1.4.0',
        'pandas>=1.5.0',
        'PyYAML>=5.1',
        'shapely>=1.7.0',
        'tqdm',
    ],
    entry_points={
        'console_scripts': ['edo=edo.cli:main'],
    },
)
