import json
from setuptools import setup
from pathlib import Path

here = Path(__file__).parent
with open(here / "spinorkit" / "package-info.json") as f:
    package = json.load(f)
long_description = (here / "README.md").read_text(encoding="utf-8")

package_name = package["name"].replace(" ", "_")

setup(
    name=package_name,
    version=package["version"],
    author=package["author"],
    packages=[package_name.replace("-", "_")],
    include_package_data=True,
    package_data={package_name: ["package-info.json", "data/*.json"]},
    license=package["license"],
    description=package.get("description", package_name),
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.9",
    install_requires=["numpy>=1.22", "scipy>=1.8", "sympy>=1.12"],
    extras_require={"usage": ["dash>=2.0.0"]},
    entry_points={"console_scripts": ["spinorkit=spinorkit.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    project_urls={
        "Source Code": "https://github.com/gbolly/spinorkit",
    },
)
