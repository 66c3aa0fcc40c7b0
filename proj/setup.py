# Copyright 2026 The Spindimer Authors
# SPDX-License-Identifier: Apache-2.0
"""CMake-driven build of the spindimer._core extension.

The canonical build system is CMake; this shim lets `pip install .` (or an
editable install with --no-build-isolation) reuse it to produce the
extension module in place of a setuptools-compiled one.
"""

import pathlib
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).resolve().parent
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        target = pathlib.Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "spindimer_core"],
            check=True,
        )

        built = next((build_dir / "python" / "spindimer").glob("_core*"))
        self.copy_file(str(built), str(target))


setup(
    ext_modules=[CMakeExtension("spindimer._core")],
    cmdclass={"build_ext": CMakeBuild},
)
