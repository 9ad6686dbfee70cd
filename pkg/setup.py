"""Build script: compiles the optional Cython kernel.

Set QLAB_NO_EXTENSION=1 to skip the extension entirely; the package then runs
on its pure-Python fallback.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QLAB_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qlab/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
        for ext in ext_modules:
            ext.extra_compile_args = ["-O3"]
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
