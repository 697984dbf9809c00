import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("REALCHAR_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("realchar._speedups", ["src/realchar/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install the pure-Python backend only.
        ext_modules = []

setup(ext_modules=ext_modules)
