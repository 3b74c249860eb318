"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python twins in ``_pykernels`` take over. Set ``EDGELIND_PURE=1`` to force
the fallback (the benchmark and the kernel tests do this).
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("EDGELIND_PURE"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend or python_backend
COMPILED = compiled_backend is not None

rank_mod_p = backend.rank_mod_p
rref_mod_p = backend.rref_mod_p
is_max_canonical = backend.is_max_canonical
fold_reduce = backend.fold_reduce

__all__ = [
    "COMPILED",
    "backend",
    "compiled_backend",
    "python_backend",
    "rank_mod_p",
    "rref_mod_p",
    "is_max_canonical",
    "fold_reduce",
]
