#!/usr/bin/env python

try:
    from setuptools import setup
except ImportError:
    try:
        from ez_setup import use_setuptools
        use_setuptools()
        from setuptools import setup
    except Exception as e:
        print("Forget setuptools, trying distutils...")
        from distutils.core import setup


description = ("Exact q-Laguerre and Al-Salam-Chihara polynomials, moments "
               "and linearization coefficients")
long_description = """qlaguerre computes the q-Laguerre and Al-Salam-Chihara
orthogonal polynomials, their moment sequences, the y-versions of the
q-Stirling numbers and the linearization coefficients of products of
q-Laguerre polynomials with exact rational arithmetic. The combinatorial
side (weak excedances and crossings of generalized derangements, and the two
bijections that prove the symmetries of the coefficients) is enumerated
exhaustively so that every formula can be cross-checked by the bundled
verification suites.
"""
setup(
    name="qlaguerre",
    version="0.1a1",
    packages=['qlaguerre', 'qlaguerre.utils'],
    package_data={'qlaguerre': ['golden/*.csv']},
    entry_points={
        'console_scripts': ['qlaguerre = qlaguerre.cli:main'],
    },
    license="GPLv3",
    description=description,
    long_description=long_description,
    install_requires=[
        "numpy",
        "bitarray",
    ],
    extras_require={
        'Testing': ['pytest', 'mock'],
    },
    test_suite='qlaguerre.tests',
)
