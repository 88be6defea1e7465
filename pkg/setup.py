
from codecs import open
from os import path

from setuptools import setup, find_packages

here = path.abspath(path.dirname(__file__))

with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='schreier',

    version='0.1.0',

    description='Schreier sets with constant gaps and modified Turán graphs',
    long_description=long_description,

    license='LGPLv3',

    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',

        'Operating System :: POSIX :: Linux',
    ],

    keywords='combinatorics schreier turan oeis',

    packages=find_packages(exclude=['docs', 'tests', 'tests.*']),

    install_requires=[
        'appdirs',
        'jsonpickle',
        'networkx',
    ],

    extras_require={
        'dev': [],
        'test': ['pytest', 'hypothesis'],
    },

    package_data={
        'schreier': ['settings/configuration/schreier_setup.cfg'],
    },

    entry_points={
        'console_scripts': [
            'schreier=schreier.cmdline:main',
        ],
    },
)
