from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "zagreb._speedups",
        ["src/zagreb/_speedups.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
