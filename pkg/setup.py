from setuptools import setup


def readme():
    with open("README.md") as f:
        return f.read()


setup( name = "HLYAConstructor",
       version = "0.1.0",
       description = "Exact arithmetic utilities for finite dimensional Hom-Lie Yamaguti algebras: axioms, factor sets, central extensions and isoclinism",
       long_description = readme(),
       long_description_content_type = "text/markdown",
       packages = ["hlyaconstructor"],
       package_dir = {"hlyaconstructor": "hlyaconstructor"},
       install_requires = ["numpy", "sympy"],
       extras_require = {"mpi": ["mpi4py"], "test": ["pytest", "hypothesis"]},
       license = "MIT",
       include_package_data = True,
       scripts = ["scripts/hlya_tool.py", "scripts/hlyaconstructor_test.py"],
       )
