# -*- coding: utf-8 -*-
# Licensed under the GPL-3.0 License, see LICENSE file for details.
from setuptools import setup
from setuptools import find_packages


if __name__ == "__main__":
    ## version
    version = '0.1.0'

    # The requirements may be too stringent and older versions
    # may be alright. Haven't checked.
    reqs = open('requirements.txt', 'r').read().strip().splitlines()

    package_data = {'lplink': ['data/default_channel.json',
                               'data/mica2.json',
                               'data/tinynode.json']}

    setup(
        name='lplink',
        version=version,
        license='GPL-3.0',
        description='Analytic packet reception model of low-power ' +
        'wireless links',
        long_description=open('README.rst', 'r').read(),
        platforms='any',
        packages=find_packages(exclude=['examples', 'examples.*']),
        include_package_data=True,
        package_data=package_data,
        install_requires=reqs,
        entry_points={
            'console_scripts': ['lplink = lplink.cli:main']},
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Environment :: Console',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
            'Operating System :: OS Independent',
            'Programming Language :: Python',
            'Programming Language :: Python :: 3',
            'Topic :: System :: Networking'
        ]
    )
