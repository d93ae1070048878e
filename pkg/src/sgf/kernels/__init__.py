"""Backend selection for the hot loops.

SGF_BACKEND=numba (default) uses the compiled kernels; SGF_BACKEND=numpy
forces the pure-numpy fallback. If numba cannot be imported the fallback is
used silently.
"""
import importlib
import os

INF = (1 << 63) - 1

_NAMES = ("numba", "numpy")


def load(name: str):
    if name not in _NAMES:
        raise ValueError(f"unknown backend {name!r}; expected one of {_NAMES}")
    return importlib.import_module(f"{__name__}._{name}")


def _select():
    wanted = os.environ.get("SGF_BACKEND", "numba").strip().lower() or "numba"
    if wanted == "numba":
        try:
            return "numba", load("numba")
        except ImportError:
            return "numpy", load("numpy")
    return wanted, load(wanted)


BACKEND, _impl = _select()

apery = _impl.apery
sieve = _impl.sieve
wilf_scan = _impl.wilf_scan
johnson_sweep = _impl.johnson_sweep
