"""Reference int64 kernels in numpy.

Both functions raise OverflowError when a conservative magnitude bound says
int64 accumulation might wrap; the caller then redoes the work with Python
integers.  The compiled module exposes the same two functions.
"""
import numpy as np

_LIMIT = 2**63 - 1
_CHUNK = 1 << 21


def _maxabs(a) -> int:
    return int(np.abs(a).max()) if a.size else 0


def linear_apply(m, x):
    """``m @ x`` for int64 ``m`` of shape (d, d) and ``x`` of shape (d, B)."""
    if _maxabs(m) * _maxabs(x) * m.shape[1] > _LIMIT:
        raise OverflowError("linear_apply may overflow int64")
    return m @ x


def contract(idx, vals, xs, dim, dtype=np.int64):
    """Sparse multilinear contraction on a batch.

    ``idx`` rows are ``[out, i_1, .., i_k]``, ``vals`` the matching values and
    ``xs`` a (k, d, B) stack of argument batches.  Returns (dim, B).
    """
    k = xs.shape[0]
    batch = xs.shape[2]
    out = np.zeros((dim, batch), dtype=dtype)
    step = max(1, _CHUNK // max(batch, 1))
    for start in range(0, len(vals), step):
        sl = slice(start, start + step)
        prod = vals[sl, None] * xs[0][idx[sl, 1]]
        for s in range(1, k):
            prod = prod * xs[s][idx[sl, s + 1]]
        np.add.at(out, idx[sl, 0], prod)
    return out


def multilinear_apply(idx, vals, xs, dim):
    if len(vals):
        bound = _maxabs(vals)
        for s in range(xs.shape[0]):
            bound *= _maxabs(xs[s])
        per_out = int(np.bincount(idx[:, 0]).max())
        if bound * per_out > _LIMIT:
            raise OverflowError("multilinear_apply may overflow int64")
    return contract(idx, vals, xs, dim)
