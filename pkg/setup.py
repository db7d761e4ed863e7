import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CORRDIFF_SKIP_EXT"):
    from Cython.Build import cythonize

    extensions = [
        Extension(
            "corrdiff._kernels_c",
            ["src/corrdiff/_kernels_c.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3", "-fopenmp", "-ffp-contract=off"],
            extra_link_args=["-fopenmp"],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
