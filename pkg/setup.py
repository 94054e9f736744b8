import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open('requirements.txt') as f:
    requirements = f.read().splitlines()

setuptools.setup(
    name="stategrid",
    use_scm_version=True,
    setup_requires=['setuptools_scm'],
    description="Definitions placed as states on a hierarchical grid and judged "
    "with three-valued truth across universes and time.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests*", "docs*"]),
    install_requires=requirements,
    include_package_data=True,
    package_data={'stategrid': ['config.json']},
    entry_points={
        "console_scripts": ["stategrid = stategrid.cli:main"]
    },
    classifiers=[
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: Implementation :: CPython",
        "Operating System :: OS Independent"
    ],
    license="AGPL-3.0"
)
