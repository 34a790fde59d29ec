"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same interface.  Set ``MVTOP_PURE=1`` to force the
fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("MVTOP_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend

BACKEND = backend.BACKEND
interior_rows = backend.interior_rows
pair_laws = backend.pair_laws
u6_joins = backend.u6_joins
closure_violations = backend.closure_violations

LAW_MEET, LAW_OPLUS, LAW_ODOT, LAW_MONO = 0, 1, 2, 3
OP_JOIN, OP_MEET, OP_OPLUS, OP_ODOT, OP_SCALAR = 0, 1, 2, 3, 4
OP_NAMES = ("join", "meet", "oplus", "odot", "scalar")
