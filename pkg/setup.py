from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qroots._kernel", ["src/qroots/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython: the pure-Python kernel in qroots._kernel_py is used instead.
    ext_modules = []

setup(ext_modules=ext_modules)
