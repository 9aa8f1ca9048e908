"""CMake-driven build for the _ietlab extension module.

scikit-build-core is not available on the package index this project is
developed against, so a plain setuptools build_ext drives CMake instead.
Use `pip install -e . --no-build-isolation`.
"""

import shutil
import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.check_call(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DIETLAB_BUILD_PYTHON=ON",
                "-DIETLAB_BUILD_TESTS=OFF",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPython_EXECUTABLE={sys.executable}",
            ]
        )
        subprocess.check_call(
            ["cmake", "--build", str(build_dir), "--target", "_ietlab", "-j"]
        )
        produced = next(build_dir.glob("_ietlab*.so"))
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(produced, target)


setup(
    ext_modules=[CMakeExtension("ietlab._ietlab")],
    cmdclass={"build_ext": CMakeBuild},
)
