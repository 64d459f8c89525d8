"""Batch classification of two-generator permutation groups.

``classify_pairs(x, ys)`` takes one permutation ``x`` (shape ``(n,)``) and a
batch ``ys`` (shape ``(k, n)``) and returns an int8 flag per row of ``ys``
for the group <x, ys[r]>:

    0  intransitive
    1  transitive, imprimitive
    2  primitive

Two implementations with identical results: a numba kernel (union-find
block merging per pair) and a vectorized numpy path that works on whole
batches of equivalence relations. Set ``BSGROWTH_DISABLE_JIT=1`` to force
the numpy path; it is also used when numba cannot be imported.
"""
from __future__ import annotations

import os
import warnings

import numpy as np

TRANSITIVE = 1
PRIMITIVE = 2

_DISABLED = os.environ.get("BSGROWTH_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False
    njit = None
    if not _DISABLED:
        warnings.warn("numba is not importable; using the numpy kernels", RuntimeWarning)

USE_JIT = HAVE_NUMBA and not _DISABLED


def _classify_loops(x, ys):
    k, n = ys.shape
    out = np.zeros(k, dtype=np.int8)
    seen = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    qa = np.empty(n, dtype=np.int64)
    qb = np.empty(n, dtype=np.int64)
    for r in range(k):
        y = ys[r]
        # orbit of 0
        for i in range(n):
            seen[i] = False
        seen[0] = True
        stack[0] = 0
        top = 1
        count = 1
        while top > 0:
            top -= 1
            p = stack[top]
            a = x[p]
            if not seen[a]:
                seen[a] = True
                stack[top] = a
                top += 1
                count += 1
            b = y[p]
            if not seen[b]:
                seen[b] = True
                stack[top] = b
                top += 1
                count += 1
        if count < n:
            continue
        if n == 1:
            out[r] = TRANSITIVE
            continue
        primitive = True
        for i in range(1, n):
            for j in range(n):
                parent[j] = j
            parent[i] = 0
            qa[0] = 0
            qb[0] = i
            qlen = 1
            merged = 1
            while qlen > 0 and merged < n - 1:
                qlen -= 1
                p = qa[qlen]
                q = qb[qlen]
                for g in range(2):
                    if g == 0:
                        u = x[p]
                        v = x[q]
                    else:
                        u = y[p]
                        v = y[q]
                    while parent[u] != u:
                        parent[u] = parent[parent[u]]
                        u = parent[u]
                    while parent[v] != v:
                        parent[v] = parent[parent[v]]
                        v = parent[v]
                    if u != v:
                        parent[v] = u
                        qa[qlen] = u
                        qb[qlen] = v
                        qlen += 1
                        merged += 1
            if merged < n - 1:
                primitive = False
                break
        out[r] = PRIMITIVE if primitive else TRANSITIVE
    return out


def _classify_numpy(x, ys):
    """Vectorized over the batch: orbit closure, then relation closure per seed pair."""
    x = np.asarray(x, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    k, n = ys.shape
    out = np.zeros(k, dtype=np.int8)
    if k == 0:
        return out
    xinv = np.argsort(x)
    yinv = np.argsort(ys, axis=1)

    reach = np.zeros((k, n), dtype=bool)
    reach[:, 0] = True
    for _ in range(n - 1):
        new = reach | reach[:, xinv] | np.take_along_axis(reach, yinv, axis=1)
        if (new == reach).all():
            break
        reach = new
    trans = reach.all(axis=1)
    if n == 1:
        out[trans] = TRANSITIVE
        return out
    idx = np.flatnonzero(trans)
    if idx.size == 0:
        return out
    yi = yinv[idx]
    rows = np.arange(idx.size)[:, None, None]
    primitive = np.ones(idx.size, dtype=bool)
    eye = np.eye(n, dtype=bool)
    for i in range(1, n):
        live = np.flatnonzero(primitive)
        if live.size == 0:
            break
        rel = np.broadcast_to(eye, (live.size, n, n)).copy()
        rel[:, 0, i] = rel[:, i, 0] = True
        yl = yi[live]
        rl = rows[: live.size]
        while True:
            # (p, q) in R  =>  (g p, g q) in R, for g = x and g = y
            new = rel | rel[:, xinv][:, :, xinv]
            new |= rel[rl, yl[:, :, None], yl[:, None, :]]
            new = np.matmul(new.astype(np.uint8), new.astype(np.uint8)) > 0
            if (new == rel).all():
                break
            rel = new
        primitive[live] = rel[:, 0, :].all(axis=1)
    out[idx] = np.where(primitive, PRIMITIVE, TRANSITIVE)
    return out


classify_pairs_numpy = _classify_numpy

if HAVE_NUMBA:
    classify_pairs_jit = njit(cache=True, nogil=True)(_classify_loops)
else:  # pragma: no cover
    classify_pairs_jit = None


def classify_pairs(x, ys):
    x = np.ascontiguousarray(x, dtype=np.int64)
    ys = np.ascontiguousarray(ys, dtype=np.int64)
    if ys.ndim != 2 or ys.shape[1] != x.shape[0]:
        raise ValueError("ys must have shape (k, len(x))")
    if USE_JIT:
        return classify_pairs_jit(x, ys)
    return _classify_numpy(x, ys)
