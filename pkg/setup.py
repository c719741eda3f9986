"""Builds the optional compiled kernels; the package works without them."""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernels not built ({exc}); using the Python fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} not built ({exc})", file=sys.stderr)


ext_modules = []
if os.environ.get("SSV_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; skipping compiled kernels", file=sys.stderr)
    else:
        ext_modules = cythonize(
            [Extension("ssvpoly._kernel_c", ["src/ssvpoly/_kernel_c.pyx"], extra_compile_args=["-O2"])],
            language_level=3,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
