"""Kernel backend selection.

Prefers the compiled ``_fastmlp`` extension, falls back to the numpy
implementation. Set TNB_BACKEND=numpy or TNB_BACKEND=cython to force one
(the benchmark and parity tests do).
"""

import os

from . import backend_numpy

_forced = os.environ.get("TNB_BACKEND", "").strip().lower()

if _forced == "numpy":
    impl = backend_numpy
    name = "numpy"
elif _forced == "cython":
    from . import _fastmlp as impl
    name = "cython"
else:
    try:
        from . import _fastmlp as impl
        name = "cython"
    except ImportError:
        impl = backend_numpy
        name = "numpy"
