"""Build hooks for the optional compiled kernel.

The extension is best effort: if Cython or a C compiler is missing the
package still installs and falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("iquotients.kernels._speed", ["src/iquotients/kernels/_speed.pyx"])],
        language_level=3,
    )


try:
    setup(ext_modules=extensions())
except SystemExit:
    # Retry without the extension so a broken toolchain cannot block install.
    setup(ext_modules=[])
