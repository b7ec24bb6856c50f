"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled module ``degstab._fastcore`` is built from Cython at install
time and handles graphs of order at most 64, which covers every hot path in
the package. Larger instances, or installs without a compiler, use
``degstab._purecore``. Both implement the same algorithms with the same
tie-breaking, so results are identical; only the speed differs.

Set ``DEGSTAB_BACKEND=pure`` in the environment (before import) to force
the pure kernels, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _purecore

try:
    from . import _fastcore
except ImportError:
    _fastcore = None

if os.environ.get("DEGSTAB_BACKEND", "").strip().lower() in {"pure", "python"}:
    _fastcore = None

_FAST_MAX_ORDER = 64


def backend_name() -> str:
    """Name of the kernel set in use: "compiled" or "pure"."""
    return "compiled" if _fastcore is not None else "pure"


def has_compiled_backend() -> bool:
    return _fastcore is not None


def hom_search(p_adj, t_adj):
    if (
        _fastcore is not None
        and len(p_adj) <= _FAST_MAX_ORDER
        and len(t_adj) <= _FAST_MAX_ORDER
    ):
        return _fastcore.hom_search(list(p_adj), list(t_adj))
    return _purecore.hom_search(p_adj, t_adj)


def brute_hom(p_adj, t_adj):
    if (
        _fastcore is not None
        and len(p_adj) <= _FAST_MAX_ORDER
        and len(t_adj) <= _FAST_MAX_ORDER
    ):
        return _fastcore.brute_hom(list(p_adj), list(t_adj))
    return _purecore.brute_hom(p_adj, t_adj)


def color_search(adj, k):
    if _fastcore is not None and len(adj) <= _FAST_MAX_ORDER:
        return _fastcore.color_search(list(adj), k)
    return _purecore.color_search(adj, k)


def min_edits(adj, k):
    if _fastcore is not None and len(adj) <= _FAST_MAX_ORDER:
        return _fastcore.min_edits(list(adj), k)
    return _purecore.min_edits(adj, k)


def odd_girth(adj):
    if _fastcore is not None and len(adj) <= _FAST_MAX_ORDER:
        return _fastcore.odd_girth(list(adj))
    return _purecore.odd_girth(adj)
