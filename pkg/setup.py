"""Build script: compiles the optional C kernel.

The extension accelerates the hot polynomial-reduction loops.  If Cython or a
C compiler is unavailable the build degrades to the pure-Python kernel, which
implements the identical interface.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the C kernel if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: C kernel build failed ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; building without the C kernel",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [Extension("kalkpart._kernel_c", ["src/kalkpart/_kernel_c.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
