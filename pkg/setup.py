import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FLAGPOSET_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("flagposet._kernel_c",
                       ["src/flagposet/_kernel_c.pyx"])],
            language_level="3",
        )
    except ImportError:
        # The package works without the compiled kernel; the pure twin
        # is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
