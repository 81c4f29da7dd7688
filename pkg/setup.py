"""Build script.

The package is pure Python except for one optional Cython extension,
``disco_rmt._pairings_cy``, which accelerates the chord-pairing counts
behind the exact moment engine.  If Cython or a C compiler is missing
the extension is skipped and the pure-Python kernel is used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("disco_rmt._pairings_cy", ["src/disco_rmt/_pairings_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
