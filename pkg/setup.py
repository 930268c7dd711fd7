import os
import sys

from setuptools import Extension, setup

# The compiled search kernel is optional: the package falls back to the
# pure-Python enumeration when the extension is absent.
PYX = "src/quadmoduli/search/_speedups.pyx"
try:
    from Cython.Build import cythonize

    ext_modules = (
        cythonize([Extension("quadmoduli.search._speedups", [PYX])], language_level=3)
        if os.path.exists(PYX)
        else []
    )
except ImportError:
    print("Cython not found; building without the compiled search kernel", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
