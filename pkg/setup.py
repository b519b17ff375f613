"""Build hook for the optional compiled scan core.

The package is pure Python except for one hot kernel: the exhaustive
minimum-cost lattice-triangle scan in jmokit._scan_c.  If Cython or a C
compiler is unavailable the build silently skips the extension and the
numpy fallback (jmokit._scan_py) is used at import time instead.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/jmokit/_scan_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
