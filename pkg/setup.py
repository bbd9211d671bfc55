from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a working C
# toolchain) the package installs anyway and falls back to the pure-Python
# implementations selected in bckbench.kernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bckbench._kernels_cy",
                ["src/bckbench/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
