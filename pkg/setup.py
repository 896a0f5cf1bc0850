from setuptools import setup, find_packages


with open('README.md') as f:
    readme = f.read()

with open('requirements.txt') as f:
    reqs = f.read()

setup(
    name='kiselman',
    version='1.0.0',
    description="Kiselman's semigroup K_n, its endomorphism monoid and the boolean matrices avoiding [[0,1],[1,0]].",
    long_description=readme,
    long_description_content_type='text/markdown',
    python_requires='>=3.7',
    packages=find_packages(exclude=('test', 'test.*', 'docs')),
    install_requires=reqs.strip().split('\n'),
    extras_require={
        'test': ['pytest>=7', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['kiselman=kiselman.pipe.cli:main'],
    },
)
