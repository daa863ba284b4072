"""Build script for the optional compiled Jacobi kernel.

The package works without the extension (a pure numpy fallback is selected
at import time), so a missing Cython or C compiler only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("specdist._jacobi", ["src/specdist/_jacobi.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
