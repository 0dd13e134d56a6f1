import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GRS_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("grs._kernels", ["src/grs/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
