from .autoencoder import (
    DEFAULT_HIDDEN,
    AeTrainingConfig,
    TrainedAutoencoder,
    make_autoencoder_spec,
    train_autoencoder,
)
from .reward import annotate_novelty, min_reconstruction_errors, novelty_reward, novelty_rewards
from .segments import SegmentConfig, extract_segments, segment_matrix
from .store import load_autoencoder_set, save_autoencoder_set

__all__ = [
    "SegmentConfig",
    "segment_matrix",
    "extract_segments",
    "AeTrainingConfig",
    "TrainedAutoencoder",
    "DEFAULT_HIDDEN",
    "make_autoencoder_spec",
    "train_autoencoder",
    "novelty_reward",
    "novelty_rewards",
    "min_reconstruction_errors",
    "annotate_novelty",
    "save_autoencoder_set",
    "load_autoencoder_set",
]
