"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is
selected at import); the build is therefore best-effort.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/knotcol/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
