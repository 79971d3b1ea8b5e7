"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so compilation failures are
downgraded to a warning rather than aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "cyclat._ckernels",
                sources=["src/cyclat/_ckernels.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"warning: skipping Cython extension build ({exc}); "
          "pure-Python kernels will be used", file=sys.stderr)

setup(ext_modules=ext_modules)
