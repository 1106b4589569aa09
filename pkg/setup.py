import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("PLANAR2TREE_NO_EXT") != "1":
    ext_modules = cythonize(
        [
            Extension(
                "planar2tree._kernels",
                ["src/planar2tree/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
