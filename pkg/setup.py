from setuptools import setup, find_packages

setup(
        name = 'syzlab',
        version = '0.0.1',
        author='syzlab developers',
        description='Finite-field verification of syzygy conjectures for paracanonical curves, and exact divisor-class arithmetic on level-ell moduli spaces',
        packages = find_packages(exclude=['tests']),
        package_data={'syzlab': ["examples/*"]},
        install_requires=[
            'numba',
            'numpy',
            'pandas',
            'pathos',
            'scipy',
            'sympy',
            'tqdm',
            'pyaml',
            'threadpoolctl',
         ],
        extras_require={'test': ['pytest']},
        entry_points={'console_scripts': ['syzlab = syzlab.cli:main']},
   )
