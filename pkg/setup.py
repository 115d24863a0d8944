from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidstat/_census_cy.pyx"],
        language_level=3,
    )
except ImportError:
    # the package falls back to the pure-Python kernel at import time
    ext_modules = []

setup(ext_modules=ext_modules)
