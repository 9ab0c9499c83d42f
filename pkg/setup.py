from setuptools import setup, find_packages

from grpinv import __version__

setup(
    name="grpinv-core",
    version=__version__,
    packages=find_packages(),
    include_package_data=True,
    package_data={"grpinv.catalog": ["data/*.yml", "data/*.grp"]},
    zip_safe=False,
    scripts=["bin/grpinv-tool"],
    license="LICENSE.txt",
    description="Invariants of finite groups acting smoothly on spheres",
    long_description=open("README.md").read(),
    python_requires=">=3.8",
    install_requires=[
        "docopt >= 0.6.2",
        "numpy >= 1.17",
        "pandas >= 1.0",
        "progressbar2 >= 3.50",
        "python-dateutil >= 2.2",
        "PyYAML >= 5.1",
        "sympy >= 1.12",
    ],
    extras_require={"dev": ["ipython >= 5.8.0", "mock >= 2.0.0", "pytest >= 6.0"]},
)
