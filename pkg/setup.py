"""Build hook for the optional native bitset kernel.

The package is fully functional without the extension: when the build is
skipped or fails, the pure-Python kernel is selected at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Try to build the extension; fall back to pure Python on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            _warn_skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            _warn_skip(exc)


def _warn_skip(exc):
    warnings.warn(
        f"native kernel build failed ({exc}); the pure-Python kernel will be used"
    )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        _warn_skip("Cython not installed")
        return []
    return cythonize(
        [Extension("semlat._kernel._native", ["src/semlat/_kernel/_native.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
