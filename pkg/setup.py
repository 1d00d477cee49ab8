import os

from setuptools import Extension, setup

# the compiled kernel is optional: without Cython or a compiler the package
# still installs and runs on the pure-Python kernel
ext_modules = []
if not os.environ.get("KRONSTAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "kronstab._kernels.mn_cy",
                    ["src/kronstab/_kernels/mn_cy.pyx"],
                    language="c++",
                    optional=True,
                    extra_compile_args=["-O3", "-std=c++17"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
