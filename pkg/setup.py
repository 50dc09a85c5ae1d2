"""Optional compiled kernels; the package falls back to numpy when the build is unavailable."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        [__import__("setuptools").Extension("quatds._kernels", ["src/quatds/_kernels.pyx"],
                                            include_dirs=[numpy.get_include()])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
