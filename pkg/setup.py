"""Build script: compiles the optional exact-arithmetic kernel extension.

The package is fully functional without the extension (a pure-Python
twin of the kernels is selected at import time), so any failure to
cythonize or compile downgrades to a source-only install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tqftkit.exactlin._kernels",
                ["src/tqftkit/exactlin/_kernels.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
