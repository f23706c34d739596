from setuptools import setup, find_packages

setup(name='drkit',
      version='0.1',
      description='Distance-ratio toolkit for constant-weight binary codes',
      license='MIT',
      packages=find_packages(exclude=['experiments', 'experiments.*']),
      install_requires=[
            'numpy',
            'scipy',
            'matplotlib'
      ],
      entry_points={
            'console_scripts': ['drkit=drkit.cli:main']
      },
      zip_safe=False,
      test_suite='nose.collector',
      tests_require=['nose', 'hypothesis'],
      )
