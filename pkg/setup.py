"""Build script: compiles the optional fast polynomial kernel.

The package is fully functional without the compiled extension; a pure
Python kernel is selected at import time when the extension is missing.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("alcurves._fastpoly", ["src/alcurves/_fastpoly.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython available: install the pure-Python package only.
    extensions = []

setup(ext_modules=extensions)
