"""Build script: compiles the optional C kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so the build is marked optional and a failed compile only
degrades performance.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "supercong._ckernels",
        ["src/supercong/_ckernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize(
        [ext],
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
