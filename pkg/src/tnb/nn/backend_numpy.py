"""Pure-numpy MLP kernels.

Interface-compatible fallback for the compiled ``_fastmlp`` extension.
Parameters live in one flat float64 vector; per layer the weight matrix
(fan_in, fan_out) is stored row-major, followed by the bias.
"""

import numpy as np

ACT_TANH = 0
ACT_RELU = 1


def forward(params, dims, act_id, x, want_cache=False):
    """Evaluate the network on a batch ``x`` of shape (B, dims[0]).

    Returns ``(y, cache)`` where cache is the list of layer outputs
    (the input batch first, post-activation after) or None.
    """
    cache = [x] if want_cache else None
    h = x
    off = 0
    last = len(dims) - 2
    for layer in range(len(dims) - 1):
        nin = dims[layer]
        nout = dims[layer + 1]
        w = params[off:off + nin * nout].reshape(nin, nout)
        off += nin * nout
        b = params[off:off + nout]
        off += nout
        z = h @ w
        z += b
        if layer == last:
            h = z
        elif act_id == ACT_TANH:
            h = np.tanh(z)
        else:
            h = np.maximum(z, 0.0)
        if want_cache:
            cache.append(h)
    return h, cache


def backward(params, dims, act_id, cache, gout):
    """Reverse-mode pass for ``sum(output * gout)`` over the cached batch.

    Returns ``(grad_params, grad_input)``; grad_params is summed over the
    batch, matching the layout of ``params``.
    """
    nlayers = len(dims) - 1
    offsets = np.empty(nlayers + 1, dtype=np.int64)
    offsets[0] = 0
    for layer in range(nlayers):
        offsets[layer + 1] = offsets[layer] + (dims[layer] + 1) * dims[layer + 1]
    gparams = np.zeros(offsets[-1])

    g = gout
    for layer in range(nlayers - 1, -1, -1):
        nin = dims[layer]
        nout = dims[layer + 1]
        if layer < nlayers - 1:
            a = cache[layer + 1]
            if act_id == ACT_TANH:
                g = g * (1.0 - a * a)
            else:
                g = g * (a > 0.0)
        off = offsets[layer]
        w = params[off:off + nin * nout].reshape(nin, nout)
        gw = gparams[off:off + nin * nout].reshape(nin, nout)
        gw += cache[layer].T @ g
        gparams[off + nin * nout:offsets[layer + 1]] = g.sum(axis=0)
        g = g @ w.T
    return gparams, g
