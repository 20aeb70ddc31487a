"""Enumeration kernel dispatch.

Imports the compiled Cython core when available, otherwise the numpy
fallback. Set ``HOPCHAOS_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("HOPCHAOS_PURE_PYTHON"):
    from . import py_backend as _impl

    BACKEND = "python"
else:
    try:
        from . import _gray as _impl

        BACKEND = "cython"
    except ImportError:
        from . import py_backend as _impl

        BACKEND = "python"

gibbs_enumerate = _impl.gibbs_enumerate
quadform_values = _impl.quadform_values
mixture_table = _impl.mixture_table


def backend():
    """Name of the active kernel backend: 'cython' or 'python'."""
    return BACKEND
