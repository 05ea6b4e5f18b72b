"""Build the optional Cython kernels.

The package works without them; ``qeuler.kernels`` falls back to the
pure-Python implementation when the extension is missing.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qeuler._kernels", ["src/qeuler/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
