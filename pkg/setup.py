"""Build script: compiles the optional C speedup kernels.

The package is fully functional without the extension (pure-Python
fallbacks are selected at import time), so a failed compile only costs
speed.  Set LORENZEN_SKIP_SPEEDUPS=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LORENZEN_SKIP_SPEEDUPS"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lorenzen._speedups", ["src/lorenzen/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
