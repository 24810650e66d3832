"""Backend selection for the sparse polynomial kernels.

The compiled kernel is used when it was built and ``SCHURLAB_PURE_PYTHON``
is not set. Calls it cannot handle fall through to the Python kernel.
"""
import os

from . import _pykernel

try:
    if os.environ.get("SCHURLAB_PURE_PYTHON"):
        raise ImportError("pure-Python kernel requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

add_terms = _pykernel.add_terms


def mul_terms(a, b, bits, xshifts, cap=-1, backend=None):
    use = backend or BACKEND
    if use == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        out = _ckernel.mul_terms(a, b, bits, tuple(xshifts), cap)
        if out is not None:
            return out
    return _pykernel.mul_terms(a, b, bits, xshifts, cap)
