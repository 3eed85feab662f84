"""Per-policy autoencoders trained to reconstruct that policy's segments.

Architecture is intentionally oversized for the data so it overfits the
training distribution and reconstructs unfamiliar behavior poorly; that
reconstruction gap is the novelty signal. Inputs are whitened per
dimension with statistics of the autoencoder's own training data.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import TrainingError
from ..nn import AdamState, MlpSpec, adam_step, backward, forward, forward_cached

# bottleneck stack for low-dimensional segment inputs; the wide variant
# (1024..32..1024) remains selectable through configuration
DEFAULT_HIDDEN = (256, 128, 64, 32, 64, 128, 256)


@dataclass
class AeTrainingConfig:
    epochs: int = 200
    batch_size: int = 1024
    learning_rate: float = 1e-3
    std_floor: float = 1e-3   # whitening floor for near-constant dimensions


@dataclass
class TrainedAutoencoder:
    spec: MlpSpec
    params: np.ndarray
    mean: np.ndarray
    std: np.ndarray

    @property
    def input_dim(self):
        return self.spec.input_dim

    def whiten(self, segments):
        return (segments - self.mean) / self.std

    def reconstruction_errors(self, segments):
        """Squared Euclidean reconstruction error per whitened segment."""
        white = self.whiten(np.atleast_2d(segments))
        out = forward(self.spec, self.params, white)
        diff = out - white
        return np.einsum("ij,ij->i", diff, diff)


def make_autoencoder_spec(segment_dim, hidden=DEFAULT_HIDDEN):
    return MlpSpec(segment_dim, tuple(hidden), segment_dim, hidden_activation="relu")


def train_autoencoder(segments, spec, training, seed):
    """Minimize mean squared reconstruction error over whitened segments.

    Returns a TrainedAutoencoder carrying the whitening statistics. Zero
    epochs returns freshly initialized parameters.
    """
    segments = np.asarray(segments, dtype=np.float64)
    if segments.ndim != 2 or segments.shape[0] == 0:
        raise TrainingError("cannot train an autoencoder on an empty segment set")
    if spec.input_dim != segments.shape[1] or spec.output_dim != segments.shape[1]:
        raise TrainingError(
            f"autoencoder spec ({spec.input_dim}->{spec.output_dim}) does not match "
            f"segment dimension {segments.shape[1]}"
        )

    rng = np.random.default_rng(seed)
    from ..nn import init_params

    params = init_params(spec, rng)
    mean = segments.mean(axis=0)
    std = np.maximum(segments.std(axis=0), training.std_floor)
    white = (segments - mean) / std

    n = white.shape[0]
    opt = AdamState.init(params.size, training.learning_rate)
    for _ in range(training.epochs):
        order = rng.permutation(n)
        for lo in range(0, n, training.batch_size):
            batch = white[order[lo:lo + training.batch_size]]
            out, cache = forward_cached(spec, params, batch)
            diff = out - batch
            # d(mean squared error)/d(out)
            gout = (2.0 / diff.size) * diff
            grad, _ = backward(spec, params, cache, gout)
            adam_step(opt, params, grad)
    return TrainedAutoencoder(spec=spec, params=params, mean=mean, std=std)
