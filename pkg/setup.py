"""PyPI setup script for the django-pseudoknot-align package."""
from setuptools import find_packages, setup

from pseudoknots import __version__

with open('README.rst', 'r') as readme_file:
    LONG_DESCRIPTION = readme_file.read()

setup(
    name='django-pseudoknot-align',
    version=__version__,
    description=('Grammar-based structural alignment of pseudoknotted RNA for Django.'),
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/x-rst',
    keywords='Django, RNA, pseudoknots, structural alignment, dynamic programming',
    platforms=['linux', 'windows'],
    packages=find_packages(exclude=['sandbox*', 'tests*']),
    package_data={
        'pseudoknots': [
            'management/commands/*.py',
        ]
    },
    python_requires='>=3.10',
    install_requires=[
        'django>=3.2',
        'numpy>=1.19',
    ],
    tests_require=[
        'pytest==7.4.4',
        'pytest-cov==4.1.0',
        'factory_boy==3.3.0',
    ],
    entry_points={
        'console_scripts': [
            'pseudoknot-align=pseudoknots.cli:main',
        ],
    },
    # See http://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Framework :: Django :: 3.2',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: Unix',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Bio-Informatics'
    ],
)
