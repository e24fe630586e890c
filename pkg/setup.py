from setuptools import Extension, setup

# The compiled kernel is an optimization, not a requirement: without Cython the
# package installs anyway and the pure-Python kernel takes over at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "classum._kernel",
                ["src/classum/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
