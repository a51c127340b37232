"""Build the optional Cython kernels; the package falls back to pure Python without them."""
import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat a failed compile as a warning so installs still succeed."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"peuler: C kernels not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"peuler: failed to build {ext.name} ({exc})")


ext_modules = []
if os.environ.get("PEULER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("peuler: Cython not available; skipping C kernels")
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "peuler._ckernels",
                    ["src/peuler/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
