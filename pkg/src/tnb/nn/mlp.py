"""MLP specification, flat-parameter layout, initialization, forward/backward.

All networks in this package are plain dense stacks described by an
``MlpSpec``; their parameters live in one flat float64 vector so that
optimizer steps and gradient combination are simple vector arithmetic.
The arithmetic itself runs in the backend selected by ``tnb.nn.backend``.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from . import backend

ACT_IDS = {"tanh": 0, "relu": 1}


@dataclass(frozen=True)
class MlpSpec:
    """Architecture of a dense network: dims plus activation names.

    ``hidden`` may be empty, giving a single affine map. The output
    activation is always linear.
    """

    input_dim: int
    hidden: tuple
    output_dim: int
    hidden_activation: str = "tanh"
    output_activation: str = "linear"

    def __post_init__(self):
        object.__setattr__(self, "hidden", tuple(int(h) for h in self.hidden))
        if self.input_dim <= 0 or self.output_dim <= 0:
            raise ConfigError("input_dim and output_dim must be positive")
        if any(h <= 0 for h in self.hidden):
            raise ConfigError("hidden layer sizes must be positive")
        if self.hidden_activation not in ACT_IDS:
            raise ConfigError(f"unknown hidden_activation {self.hidden_activation!r}")
        if self.output_activation != "linear":
            raise ConfigError("only linear output activation is supported")
        dims = (self.input_dim,) + self.hidden + (self.output_dim,)
        object.__setattr__(self, "_dims", dims)
        object.__setattr__(self, "_dims32", np.asarray(dims, dtype=np.int32))

    @property
    def dims(self):
        return self._dims

    @property
    def act_id(self):
        return ACT_IDS[self.hidden_activation]

    @property
    def param_count(self):
        dims = self._dims
        return sum((dims[i] + 1) * dims[i + 1] for i in range(len(dims) - 1))

    def to_dict(self):
        return {
            "input_dim": self.input_dim,
            "hidden": list(self.hidden),
            "output_dim": self.output_dim,
            "hidden_activation": self.hidden_activation,
            "output_activation": self.output_activation,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            input_dim=int(d["input_dim"]),
            hidden=tuple(d["hidden"]),
            output_dim=int(d["output_dim"]),
            hidden_activation=d.get("hidden_activation", "tanh"),
            output_activation=d.get("output_activation", "linear"),
        )


def layout(spec):
    """(name, shape, offset) descriptors for every parameter block."""
    out = []
    off = 0
    dims = spec.dims
    for i in range(len(dims) - 1):
        out.append((f"w{i}", (dims[i], dims[i + 1]), off))
        off += dims[i] * dims[i + 1]
        out.append((f"b{i}", (dims[i + 1],), off))
        off += dims[i + 1]
    return out


def init_params(spec, rng):
    """Scaled-uniform weights in +-sqrt(6/(fan_in+fan_out)), zero biases."""
    params = np.zeros(spec.param_count)
    dims = spec.dims
    off = 0
    for i in range(len(dims) - 1):
        nin, nout = dims[i], dims[i + 1]
        limit = np.sqrt(6.0 / (nin + nout))
        params[off:off + nin * nout] = rng.uniform(-limit, limit, nin * nout)
        off += nin * nout + nout  # biases stay zero
    return params


def _check_params(spec, params):
    if params.shape != (spec.param_count,):
        raise ConfigError(
            f"parameter vector has length {params.shape}, spec needs {spec.param_count}"
        )


def forward(spec, params, x):
    """Forward pass; accepts a single input (1-D) or a batch (2-D)."""
    _check_params(spec, params)
    x = np.asarray(x, dtype=np.float64)
    single = x.ndim == 1
    if single:
        x = x[None, :]
    if x.shape[1] != spec.input_dim:
        raise ConfigError(f"input dim {x.shape[1]} != spec input_dim {spec.input_dim}")
    y, _ = backend.impl.forward(params, spec._dims32, spec.act_id, np.ascontiguousarray(x))
    return y[0] if single else y


def forward_cached(spec, params, x):
    """Batch forward keeping per-layer activations for ``backward``."""
    _check_params(spec, params)
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != spec.input_dim:
        raise ConfigError(f"expected batch of shape (B, {spec.input_dim})")
    return backend.impl.forward(params, spec._dims32, spec.act_id, x, True)


def backward(spec, params, cache, output_grad):
    """Gradient of sum(output * output_grad) w.r.t. params and input.

    ``cache`` must come from ``forward_cached`` under the same params.
    Parameter gradients are summed over the batch.
    """
    _check_params(spec, params)
    output_grad = np.ascontiguousarray(output_grad, dtype=np.float64)
    if output_grad.shape != (cache[0].shape[0], spec.output_dim):
        raise ConfigError("output_grad shape does not match cached batch")
    return backend.impl.backward(params, spec._dims32, spec.act_id, cache, output_grad)
