"""Builds the optional compiled kernels; the package works without them."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, no Cython
            print(f"warning: compiled kernels not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure-Python fallback")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lpa_lab._kernels", ["src/lpa_lab/_kernels.pyx"], extra_compile_args=["-O2"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
