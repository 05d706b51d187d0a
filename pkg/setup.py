"""Build script: compiles the optional sieve kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure here degrades to a pure-Python install
instead of aborting.  Set MOEBIUS_NO_EXT=1 to skip the compile step.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MOEBIUS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "moebius_km._sieve_kernels",
                    ["src/moebius_km/_sieve_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
