from __future__ import (
    absolute_import,
    unicode_literals,
)

import sys

from setuptools import (  # type: ignore
    find_packages,
    setup,
)

from dualeq import __version__


def readme():
    with open('README.rst') as f:
        return f.read()


spinx_requires = [
    'sphinx~=3.5;python_version>="3.6"',
    'jinja2==3.0.3;python_version>="3.6"',
]

tests_require = [
    'hypothesis>=4.0',
    'mypy~=0.740;python_version>"3.4"',
    'pytest>4.2,<5.4',
    'pytest-cov~=2.5',
    'coverage~=5.2',
    'pytest-runner',
    'importlib-metadata~=5.0;python_version>"3.6"'
]

mypy_requires = [
    'types-six;python_version>="3.7"',
]

setup(
    name='dualeq',
    version=__version__,
    author='The dualeq developers',
    description='Dual equivalence graphs, their axioms, and Schur expansions of quasisymmetric functions',
    long_description=readme(),
    packages=list(map(str, find_packages(include=['dualeq', 'dualeq.*']))),
    package_data={
        str('dualeq'): [str('py.typed'), str('fixtures/*.json')],  # PEP 561,
    },
    zip_safe=False,  # PEP 561
    include_package_data=True,
    install_requires=[
        'attrs>=19.2,<22',
        'conformity~=1.28',
        'networkx>=2.4',
        'six',
        'sympy>=1.5',
    ],
    python_requires='>=3.7',
    tests_require=tests_require,
    setup_requires=['pytest-runner'] if {'pytest', 'test', 'ptr'}.intersection(sys.argv) else [],
    test_suite='tests',
    extras_require={
        'docs': spinx_requires,
        'testing': tests_require,
        'mypy': mypy_requires,
    },
    entry_points={
        'console_scripts': [
            'deg = dualeq.cli:deg_main',
            'sym = dualeq.cli:sym_main',
            'llt = dualeq.cli:llt_main',
            'dualeq = dualeq.cli:dualeq_main',
        ],
    },
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
