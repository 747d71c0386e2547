import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("MUTALG_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mutalg._kernel._ckernel",
                    ["src/mutalg/_kernel/_ckernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package falls back to the pure-Python kernel at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
