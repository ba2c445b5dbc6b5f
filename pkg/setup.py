from setuptools import setup, find_packages
from os import path
from io import open

here = path.abspath(path.dirname(__file__))

with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()


setup(
    name="nilift",
    version="1.0.0",
    description="Exact lifts of local systems on nilpotent orbits to Levi representations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    keywords="nilpotent orbits lie algebras weyl group representations",
    packages=find_packages(exclude=["tests"]),
    package_data={"nilift": ["data/*.tsv", "templates/*.mako"]},
    python_requires=">=3.10",
    install_requires=[
        "mako",
        "pydantic>=2",
        "sympy",
    ],
    extras_require={
        "lint": ["flake8"],
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "nilift=nilift.main:main",
        ],
    },
)
