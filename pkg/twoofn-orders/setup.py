# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

from setuptools import setup, find_packages
from io import open  # io.open needed for Python 2 compat


with open("README.md", "r") as fh:
    _long_description = fh.read()

constant = {}
with open("twoofn/constant.py") as fh:
    exec(fh.read(), constant)

setup(
    name="twoofn-orders",
    version=constant["VERSION"],
    description="Stochastic orderings of 2-out-of-n system lifetimes",
    license="MIT License",
    long_description=_long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
    ],
    install_requires=[
        "six>=1.12.0,<2.0.0",
        "transitions>=0.6.8,<1.0.0",
        "numpy>=1.17.0",
        "scipy>=1.3.0",
    ],
    python_requires=">=3.6, <4",
    packages=find_packages(exclude=["tests", "tests.*", "samples"]),
    entry_points={"console_scripts": ["twoofn=twoofn.cli:main"]},
    zip_safe=False,
)
