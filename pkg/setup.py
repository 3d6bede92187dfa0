from setuptools import setup, find_packages

DESCRIPTION = "Two-step fixed-point proximity algorithms for multi-block separable convex problems"

package_data = {
    "twostep": [
        "py.typed",
    ]
}

setup(
    name="twostep-proximity",
    version="1.0.0",
    description=DESCRIPTION,
    long_description=DESCRIPTION,
    package_dir={"": "server"},
    packages=find_packages("server"),
    package_data=package_data,
    include_package_data=True,
    license="AGPLv3",
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.8",
        "flask>=2.2,<4.0",
        "click>=8.0",
        "cerberus>=1.3,<2.0",
        "blinker>=1.6",
        "pyyaml>=6.0",
        "deepdiff",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Framework :: Flask",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU Affero General Public License v3",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
