# Copyright 2026 The capgaps authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""CMake-backed build of the capgaps._core extension."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str) -> None:
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_dir = ext_path.parent
        ext_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DCAPGAPS_BUILD_PYTHON=ON",
            "-DCAPGAPS_BUILD_TESTS=OFF",
        ]
        subprocess.run(
            ["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True
        )
        jobs = str(os.cpu_count() or 2)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "capgaps_python", "-j", jobs],
            cwd=build_dir,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("capgaps._core")],
    cmdclass={"build_ext": CMakeBuild},
)
