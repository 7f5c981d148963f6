"""Build script: compiles the optional Cython tokenizer extension.

The package works without the extension (a pure-Python tokenizer is
selected at import time), so the build is marked optional and any
compiler failure degrades to the fallback instead of aborting install.

Build in place with:  python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wandercode.ingest._scanner",
                ["src/wandercode/ingest/_scanner.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
