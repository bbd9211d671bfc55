"""Backend selection for the hot table kernels.

The compiled extension is used when present; setting BCKBENCH_PURE=1 in the
environment forces the pure-Python fallback.  Both backends implement the
same three functions with identical results:

    violation(flat_table, n) -> (law_id, witness) | None
    canonical(flat_table, n) -> tuple
    search(n, pin=-1)        -> list of flat tuples
"""

import os

if os.environ.get("BCKBENCH_PURE"):
    from bckbench import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from bckbench import _kernels_cy as _impl

        BACKEND = "cython"
    except ImportError:
        from bckbench import _kernels_py as _impl

        BACKEND = "python"

violation = _impl.violation
canonical = _impl.canonical
search = _impl.search
