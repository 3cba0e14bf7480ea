import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to a pure Python
# implementation when the extension is unavailable (see spectile/kernels.py).
ext_modules = []
if os.environ.get("SPECTILE_NO_EXT") != "1" and os.path.exists("src/spectile/_ckern.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("spectile._ckern", ["src/spectile/_ckern.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
