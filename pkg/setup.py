from setuptools import setup, Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("oddgenus._kernels", ["src/oddgenus/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # The package still works without the compiled kernel: a pure-Python
    # fallback is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
