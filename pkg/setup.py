from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; genus0._kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("genus0._speedups", ["src/genus0/_speedups.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
