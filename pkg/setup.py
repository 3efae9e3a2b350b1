import setuptools # type: ignore

with open("readme.md", "r") as fh:
    long_description = fh.read()

description = (
    "Exact-arithmetic coalgebras, corings and coseparability certificates"
)

setuptools.setup(
    name="pyCoring",
    version="0.1.0",
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=["typing_extensions", "sympy>=1.12"],
    extras_require={"tests": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["pycoring=pyCoring.cli:main"]}
)
