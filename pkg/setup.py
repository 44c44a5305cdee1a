import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "oplixnet._meshkern",
                ["src/oplixnet/_meshkern.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

# Without Cython the package installs pure-Python; oplixnet.kernels falls back
# to the NumPy implementation at import time.
setup(ext_modules=extensions)
