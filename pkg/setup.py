import os

from setuptools import setup

ext_modules = []
if os.environ.get("MATCHBOOK_NO_EXTENSION", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("matchbook._ckernel", ["src/matchbook/_ckernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
