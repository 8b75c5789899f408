"""Build script: compiles the optional native kernel extension.

The package works without the extension (a pure-Python fallback is selected at
import time), so a failed compile only costs speed. Build in place for
development with:

    python setup.py build_ext --inplace
"""

import numpy as np
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Degrade to the pure-Python backend instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"WARNING: native kernel build skipped ({exc}); "
                  "numrad will use the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: could not compile {ext.name} ({exc}); "
                  "numrad will use the pure-Python backend")


extensions = [
    Extension(
        "numrad.kernels._native",
        ["src/numrad/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
    cmdclass={"build_ext": OptionalBuildExt},
)
