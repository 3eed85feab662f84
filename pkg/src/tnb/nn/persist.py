"""Parameter persistence: spec + flat vector + format version in one npz.

Round-trips are exact at float64. Extra named arrays and JSON-safe
metadata ride along in the same file (policies store their log-stddev
this way).
"""

import json

import numpy as np

from ..errors import PersistError
from .mlp import MlpSpec

FORMAT_VERSION = 1


def save_mlp(path, spec, params, arrays=None, meta=None):
    header = {"format_version": FORMAT_VERSION, "spec": spec.to_dict()}
    if meta:
        header["meta"] = meta
    payload = dict(arrays or {})
    payload["params"] = np.asarray(params, dtype=np.float64)
    np.savez(path, __header__=np.str_(json.dumps(header)), **payload)


def load_mlp(path):
    """Returns (spec, params, arrays, meta)."""
    try:
        with np.load(path, allow_pickle=False) as data:
            payload = {k: data[k] for k in data.files}
    except Exception as exc:
        raise PersistError(f"cannot read parameter file {path}: {exc}") from exc
    if "__header__" not in payload or "params" not in payload:
        raise PersistError(f"{path} is not a parameter file (missing header/params)")
    try:
        header = json.loads(str(payload.pop("__header__")))
    except json.JSONDecodeError as exc:
        raise PersistError(f"corrupt header in {path}") from exc
    version = header.get("format_version")
    if version != FORMAT_VERSION:
        raise PersistError(
            f"{path}: format version {version} unsupported (expected {FORMAT_VERSION})"
        )
    spec = MlpSpec.from_dict(header["spec"])
    params = np.asarray(payload.pop("params"), dtype=np.float64)
    if params.shape != (spec.param_count,):
        raise PersistError(
            f"{path}: parameter vector length {params.shape[0]} does not match spec"
        )
    return spec, params, payload, header.get("meta", {})
