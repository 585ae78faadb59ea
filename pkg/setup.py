from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional: a failed compile leaves the pure-Python path in place
    ext_modules = cythonize(
        [Extension("triestem._speedups", ["src/triestem/_speedups.pyx"], optional=True)],
        language_level=3,
    )

setup(ext_modules=ext_modules)
