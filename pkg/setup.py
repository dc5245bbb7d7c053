#
# setup.py
#
# Installation script to get setuptools to install orthopack into
# a Python environment.
#

import sys
import setuptools

# Import the lengthy rich-text README as the package's long
# description:
with open('README.rst', 'r') as fh:
	long_description = fh.read()

setuptools_info = {
	'name': 'orthopack',
	'version': '0.3.0',
	'author': 'orthopack developers',
	'description': 'Exact verification of maximal incomplete orthogonal exponential sets (orthopack)',
	'long_description': long_description,
	'zip_safe': True,
	'packages': setuptools.find_packages(),
	'install_requires': [
		'numpy>=1.15.1',
		'pandas>=0.24.2',
		'sympy>=1.5',
		'mpmath>=1.1.0',
		'more_itertools>=7.2.0',
	    'PyYAML>=5.1.2'],
	'entry_points': {
		'console_scripts': ['orthopack=orthopack.cli:main'],
	},
	'classifiers': [
		"Programming Language :: Python :: 3",
		"License :: OSI Approved :: MIT License",
		"Operating System :: OS Independent",
		"Intended Audience :: Science/Research",
		"Topic :: Scientific/Engineering :: Mathematics",
	    ],
    }

if sys.version_info[0] >= 3:
	#
	# Augment for Python 3 setuptools:
	#
	setuptools_info['long_description_content_type'] = 'text/x-rst'

setuptools.setup(**setuptools_info)
