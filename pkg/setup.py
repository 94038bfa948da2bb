#  Created by the pconnect developers

from setuptools import setup, find_packages

# include additional files
package_data = {
    'pconnect': ['fixtures/*.json']}

# set classifiers
classifiers = [
    'Development Status :: 3 - Alpha',
    'Programming Language :: Python :: 3 :: Only',
    'Operating System :: OS Independent',
    'License :: OSI Approved :: MIT License',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Intended Audience :: Science/Research']

# main setup
setup(
    name = 'pconnect',
    version = "0.1.0",
    description = 'Exact p-connection matrices of Morse decompositions on regular coverings',
    license = 'MIT',
    packages = find_packages(exclude=['tests']),
    package_data = package_data,
    classifiers = classifiers,
    python_requires = '>=3.7',
    install_requires = ['numpy', 'networkx'],
    extras_require = {'test': ['pytest']},
    entry_points = {'console_scripts': ['pconnect = pconnect.cli:main']},
    zip_safe = False)
