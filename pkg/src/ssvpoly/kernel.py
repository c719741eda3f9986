"""Backend selection for the polynomial kernels.

The compiled module is used when it imports; setting ``SSV_PURE_PYTHON=1``
forces the Python fallback.  Callers access the kernels as attributes of
this module (``kernel.mul``) so :func:`use_backend` can swap them at
runtime, which the benchmark and the kernel tests rely on.
"""

import os

from . import _kernel_py

try:
    from . import _kernel_c
except ImportError:  # pragma: no cover - depends on the build
    _kernel_c = None

_NAMES = ("mul", "mul_term", "add", "sub", "divexact", "evaluate", "divides_key", "monomial_gcd")

FIELD_BITS = _kernel_py.FIELD_BITS
FIELD_MASK = _kernel_py.FIELD_MASK
GUARD = _kernel_py.GUARD


def available_backends():
    return ["python"] + (["cython"] if _kernel_c is not None else [])


def use_backend(name):
    """Bind the kernel functions of the named backend into this module."""
    global BACKEND
    if name == "cython":
        if _kernel_c is None:
            raise ImportError("compiled kernels are not built")
        mod = _kernel_c
    elif name == "python":
        mod = _kernel_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for attr in _NAMES:
        g[attr] = getattr(mod, attr)
    BACKEND = name


BACKEND = "python"
use_backend(
    "cython" if _kernel_c is not None and os.environ.get("SSV_PURE_PYTHON") != "1" else "python"
)
