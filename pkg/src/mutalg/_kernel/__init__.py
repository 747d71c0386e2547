"""Kernel selection: compiled extension when available, pure Python otherwise.

Set MUTALG_PURE_KERNEL=1 to force the pure-Python lane (used by the benchmark
and as an escape hatch on platforms without a compiler).
"""

import os

if os.environ.get("MUTALG_PURE_KERNEL"):
    from . import pykernel as impl
else:
    try:
        from . import _ckernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernel as impl

kadd = impl.kadd
kneg = impl.kneg
kscale = impl.kscale
kshift = impl.kshift
kmul = impl.kmul


def backend() -> str:
    """Name of the active kernel lane ("cython" or "python")."""
    return impl.BACKEND
