from setuptools import setup, find_packages

setup(
    name="displaced_mass_spectra",
    version="1.0.0",
    description="Bound states of A/x^2 - B/x with a displacement-operator position-dependent mass",
    author="Displaced Mass Spectra Maintainers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.24",
        "scipy>=1.10",
        "langgraph>=0.0.40",
        "prefect>=2.14.0",
        "python-dotenv>=1.0.0",
        "typer>=0.9",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["pdm-spectra=src.cli:main"],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
)
