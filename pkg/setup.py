import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name='brieskorn-obstruct',
    version='1.0.0',
    author='Brieskorn Obstruct contributors',
    description='Invariants of Brieskorn homology spheres and obstructions to Weinstein fillings '
                'in positive symplectic 4-manifolds',
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='MIT',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*', 'docs']),
    python_requires='>=3.8',
    install_requires=['colorlog'],
    extras_require={'docs': ['sphinx', 'sphinx-rtd-theme']},
    entry_points={
        'console_scripts': [
            'brieskorn=brieskorn.brieskorn_cli:main',
            'brieskorn-tests=brieskorn.brieskorn_tests:brieskorn_tests',
        ],
    },
)
