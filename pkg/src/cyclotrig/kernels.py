"""Kernel dispatch: compiled int64 core when importable, pure Python otherwise.

The compiled functions signal int64 overflow by returning ``None``; the
call is then repeated on the arbitrary-precision Python path, so results
never depend on which backend is active.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = [
    "backend",
    "compiled_available",
    "set_backend",
    "reduce",
    "mulmod",
    "substitute",
    "orbit",
    "orbit_product",
    "inverse_mod_p",
    "orbit_product_split",
]

_active = _ckernels


def compiled_available() -> bool:
    return _ckernels is not None


def backend() -> str:
    return "compiled" if _active is not None else "python"


def set_backend(name: str) -> str:
    """Select ``"compiled"``, ``"python"`` or ``"auto"``; returns the previous name."""
    global _active
    previous = backend()
    if name == "python":
        _active = None
    elif name in ("compiled", "auto"):
        if _ckernels is None and name == "compiled":
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def _dispatch(name):
    fallback = getattr(_pykernels, name)

    def call(*args):
        if _active is not None:
            out = getattr(_active, name)(*args)
            if out is not None:
                return out
        return fallback(*args)

    call.__name__ = name
    call.__doc__ = fallback.__doc__
    return call


reduce = _dispatch("reduce")
mulmod = _dispatch("mulmod")
substitute = _dispatch("substitute")
orbit = _dispatch("orbit")
orbit_product = _dispatch("orbit_product")
inverse_mod_p = _dispatch("inverse_mod_p")
orbit_product_split = _dispatch("orbit_product_split")
