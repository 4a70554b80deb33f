import os

from setuptools import Extension, setup

# The compiled kernel core is optional: the package falls back to the pure
# Python twin when the extension is absent. Set COORBITAL_NO_EXT=1 to skip
# compilation entirely.
ext_modules = []
if os.environ.get("COORBITAL_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "coorbital._kernels",
                    ["src/coorbital/_kernels.pyx"],
                    # -ffp-contract=off: no FMA contraction. The sin/cos
                    # builtins are disabled because gcc otherwise fuses
                    # sin(x)/cos(x) pairs into sincos, which can differ by
                    # 1 ulp. Both are needed to keep the compiled core
                    # bit-identical to the pure Python fallback.
                    extra_compile_args=[
                        "-O2",
                        "-ffp-contract=off",
                        "-fno-builtin-sin",
                        "-fno-builtin-cos",
                    ],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
