"""Versioned persistence for ordered autoencoder sets."""

import json

import numpy as np

from ..errors import ConfigError, PersistError
from ..nn.mlp import MlpSpec
from .autoencoder import TrainedAutoencoder

FORMAT_VERSION = 1


def save_autoencoder_set(path, autoencoders):
    header = {
        "format_version": FORMAT_VERSION,
        "count": len(autoencoders),
        "specs": [ae.spec.to_dict() for ae in autoencoders],
    }
    payload = {"__header__": np.str_(json.dumps(header))}
    for i, ae in enumerate(autoencoders):
        payload[f"params_{i}"] = ae.params
        payload[f"mean_{i}"] = ae.mean
        payload[f"std_{i}"] = ae.std
    np.savez(path, **payload)


def load_autoencoder_set(path, expected_input_dim=None):
    """Load an ordered autoencoder set; optionally enforce the segment dim."""
    try:
        with np.load(path, allow_pickle=False) as data:
            payload = {k: data[k] for k in data.files}
    except Exception as exc:
        raise PersistError(f"cannot read autoencoder set {path}: {exc}") from exc
    if "__header__" not in payload:
        raise PersistError(f"{path} is not an autoencoder-set file")
    try:
        header = json.loads(str(payload["__header__"]))
    except json.JSONDecodeError as exc:
        raise PersistError(f"corrupt header in {path}") from exc
    if header.get("format_version") != FORMAT_VERSION:
        raise PersistError(
            f"{path}: format version {header.get('format_version')} unsupported"
        )
    out = []
    for i, spec_dict in enumerate(header["specs"]):
        spec = MlpSpec.from_dict(spec_dict)
        try:
            ae = TrainedAutoencoder(
                spec=spec,
                params=np.asarray(payload[f"params_{i}"], dtype=np.float64),
                mean=np.asarray(payload[f"mean_{i}"], dtype=np.float64),
                std=np.asarray(payload[f"std_{i}"], dtype=np.float64),
            )
        except KeyError as exc:
            raise PersistError(f"{path}: missing arrays for autoencoder {i}") from exc
        if ae.params.shape != (spec.param_count,):
            raise PersistError(f"{path}: autoencoder {i} parameter length mismatch")
        out.append(ae)
    if expected_input_dim is not None:
        for i, ae in enumerate(out):
            if ae.input_dim != expected_input_dim:
                raise ConfigError(
                    f"autoencoder {i} expects segments of dimension {ae.input_dim}, "
                    f"required {expected_input_dim}"
                )
    return out
