"""Build script: compiles the optional enumeration kernel when Cython is available.

The package works without the extension; ``hilbertfn.kernels`` falls back to
the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hilbertfn._oracle_cy",
                ["src/hilbertfn/_oracle_cy.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
