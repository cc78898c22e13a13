"""Build script: compiles the optional kernel extension when Cython is present.

The package works without the extension (a pure-Python kernel module is
selected at import time), so a failed or skipped build is not an error.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "minorlogic._ckernels",
        ["src/minorlogic/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
