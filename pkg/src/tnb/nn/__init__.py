from .adam import AdamState, adam_step
from .mlp import MlpSpec, backward, forward, forward_cached, init_params, layout
from .persist import load_mlp, save_mlp

__all__ = [
    "AdamState",
    "adam_step",
    "MlpSpec",
    "forward",
    "forward_cached",
    "backward",
    "init_params",
    "layout",
    "save_mlp",
    "load_mlp",
]
