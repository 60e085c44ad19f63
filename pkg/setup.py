from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python fallback in igrowth._pykernels is used at import time
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("igrowth._kernels", ["src/igrowth/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
