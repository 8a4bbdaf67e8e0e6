from setuptools import Extension, setup

import numpy as np
from Cython.Build import cythonize

ext_modules = cythonize(
    [
        Extension(
            "cyclocover._kernels._ckernels",
            ["src/cyclocover/_kernels/_ckernels.pyx"],
            include_dirs=[np.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            optional=True,
        )
    ],
    language_level=3,
)

setup(ext_modules=ext_modules)
