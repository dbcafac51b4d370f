"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``MATROIDVOL_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from matroidvol import _kernels_py

if os.environ.get("MATROIDVOL_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from matroidvol import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

rank_table = _impl.rank_table
exchange_violation = _impl.exchange_violation
count_lattice_points = _impl.count_lattice_points


def backends():
    """Mapping of available backend names to kernel modules."""
    out = {"python": _kernels_py}
    try:
        from matroidvol import _kernels

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
