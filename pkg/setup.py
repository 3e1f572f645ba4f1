"""Builds the optional compiled gate kernels.

The package works without them (ltoracle.backends falls back to the numpy
kernels), so a missing Cython or C compiler must not break installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ltoracle.backends._kernels",
                ["src/ltoracle/backends/_kernels.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
