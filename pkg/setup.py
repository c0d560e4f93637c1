import os

from setuptools import setup

# The compiled kernels are optional: the package falls back to the pure
# numpy implementation when the extension is absent.  GKCODES_SKIP_EXT=1
# forces a pure-Python install on machines without a C toolchain.
ext_modules = []
if not os.environ.get("GKCODES_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gkcodes/_kernels/_core.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
