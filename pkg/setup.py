import os

from setuptools import Extension, setup

try:
    import gmpy2
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    gmpy2_dir = os.path.dirname(gmpy2.__file__)
    ext_modules = cythonize(
        [Extension("qda._kernel", ["src/qda/_kernel.pyx"],
                   include_dirs=[gmpy2_dir], libraries=["gmp"],
                   extra_compile_args=["-O3"],
                   # a failed compile leaves the pure-Python kernel in charge
                   optional=True)],
        include_path=[os.path.dirname(gmpy2_dir)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
