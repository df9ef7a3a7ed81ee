"""Build hook for the optional compiled kernel.

The package works without the extension: kernels.py falls back to a pure
Python implementation when antiregular._speedups is missing, so a failed
or skipped compilation only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "antiregular._speedups",
                ["src/antiregular/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
