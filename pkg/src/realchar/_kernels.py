"""Kernel backend selection.

The hot loops (group enumeration, conjugation orbits, class-matrix counting)
live in the compiled extension ``realchar._speedups`` when it is built, with
``realchar._kernels_py`` as the drop-in pure-Python fallback.  Selection
happens once at import; set ``REALCHAR_BACKEND=py`` or ``REALCHAR_BACKEND=c``
to force a side.
"""

from __future__ import annotations

import os

_choice = os.environ.get("REALCHAR_BACKEND", "auto").lower()

if _choice not in ("auto", "py", "c"):
    raise RuntimeError(f"REALCHAR_BACKEND must be auto, py or c, not {_choice!r}")

if _choice == "py":
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "c":
            raise RuntimeError(
                "REALCHAR_BACKEND=c but the compiled extension is not built; "
                "run `python setup.py build_ext --inplace` or reinstall"
            ) from None
        from . import _kernels_py as _impl  # type: ignore[no-redef]

PermTable = _impl.PermTable
bfs_closure = _impl.bfs_closure
BACKEND = _impl.BACKEND
