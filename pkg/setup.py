"""Build script.  The compiled extension is optional: if Cython or a C
compiler is unavailable the package installs anyway and falls back to the
pure numpy backend at import time."""

import numpy
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "biharm._core._speedups",
        sources=["src/biharm/_core/_speedups.pyx"],
        include_dirs=[numpy.get_include()],
        # CYTHON_CCOMPLEX=0 keeps complex arithmetic in this translation
        # unit (naive formulas, our flags) instead of libgcc's __muldc3,
        # which is required for bit-parity with the numpy backend.
        define_macros=[
            ("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION"),
            ("CYTHON_CCOMPLEX", "0"),
        ],
        # -ffp-contract=off keeps results bit-identical with the numpy
        # backend (no fused multiply-add contraction).
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
