from setuptools import setup

setup(
    name='quasigroup-elgamal',
    version='0.1.0dev',
    description='ElGamal-style encryption over quasigroup isotopies, with the Markovski transformation',
    packages=['quasigroup_elgamal'],
    python_requires='>=3.9',
    install_requires=[
        'numpy >= 1.17',
        'sympy',
        'Click',
        'tqdm',
        'pandas'
    ],

    extras_require = {
        'test': [
            'pytest',
            'hypothesis'
        ],
        'docs': [
            'sphinx'
        ]
    },
    entry_points = {
        'console_scripts':
            ['qgelgamal = quasigroup_elgamal.cli:cli']
    }
)
