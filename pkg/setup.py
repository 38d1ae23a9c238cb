from setuptools import setup

setup(name='svtwist',
      version='1.0.0',
      description='Exact Jordanian twist of the super-Virasoro algebra',
      packages=['svt', 'svt.test', 'svt.test.util'],
      package_dir={'svt': 'src/svt'},
      install_requires=['sympy>=1.5'],
      entry_points={'console_scripts': ['svt = svt.cli:main']},
      )
