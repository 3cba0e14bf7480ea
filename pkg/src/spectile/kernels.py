"""Kernel backend selection.

The survey and the finder primitives run either in the compiled extension
(_ckern, built from _ckern.pyx) or in the pure Python twin (_pykern).  Both
implement identical algorithms with identical visit orders, so results are
interchangeable; the compiled one is just much faster.  Selection happens at
import: the extension when available, else the fallback.  Set
SPECTILE_BACKEND=python or =cython to force one explicitly.
"""

from __future__ import annotations

import os

from . import _pykern

_forced = os.environ.get("SPECTILE_BACKEND")

if _forced == "python":
    _impl = _pykern
elif _forced == "cython":
    from . import _ckern as _impl  # noqa: F401  (ImportError is the intended failure)
elif _forced is None:
    try:
        from . import _ckern as _impl
    except ImportError:
        _impl = _pykern
else:
    raise ValueError(f"SPECTILE_BACKEND must be 'python' or 'cython', got {_forced!r}")

BACKEND: str = _impl.BACKEND

enumerate_canonical = _impl.enumerate_canonical
classify_many = _impl.classify_many
clique_spectrum = _impl.clique_spectrum
tile_complement = _impl.tile_complement
canonical_form = _impl.canonical_form
units_canonical = _impl.units_canonical
