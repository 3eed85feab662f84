"""Gaussian MLP policy and value networks.

The policy maps state to an action-distribution mean through a tanh MLP;
the log-stddev is a learned state-independent vector, clamped to
[LOG_STD_MIN, LOG_STD_MAX] after every update. Policy parameters live in
one flat vector (mean net first, then log-stddev) so gradient combination
and Adam act on plain arrays.
"""

import numpy as np

from ..errors import ConfigError
from ..nn import MlpSpec, forward, init_params

LOG_STD_MIN = -5.0
LOG_STD_MAX = 2.0
_LOG_2PI = float(np.log(2.0 * np.pi))

DEFAULT_HIDDEN = (64, 64, 64)


class GaussianPolicy:
    def __init__(self, spec, flat):
        if flat.shape != (spec.param_count + spec.output_dim,):
            raise ConfigError("policy parameter vector has wrong length")
        self.spec = spec
        self.flat = flat
        # views into the flat vector; optimizer updates flow through
        self.params = flat[:spec.param_count]
        self.log_std = flat[spec.param_count:]

    @classmethod
    def create(cls, obs_dim, act_dim, hidden=DEFAULT_HIDDEN, log_std_init=0.0, rng=None):
        spec = MlpSpec(obs_dim, tuple(hidden), act_dim, hidden_activation="tanh")
        rng = rng or np.random.default_rng()
        flat = np.concatenate([init_params(spec, rng), np.full(act_dim, log_std_init)])
        return cls(spec, flat)

    @property
    def n_params(self):
        return self.flat.size

    @property
    def action_dim(self):
        return self.spec.output_dim

    def copy(self):
        return GaussianPolicy(self.spec, self.flat.copy())

    def clamp_log_std(self):
        np.clip(self.log_std, LOG_STD_MIN, LOG_STD_MAX, out=self.log_std)

    def mean_action(self, obs):
        return forward(self.spec, self.params, obs)

    def sample(self, obs, rng):
        """Draw an action and its log-probability at a single state."""
        mu = forward(self.spec, self.params, obs)
        std = np.exp(self.log_std)
        action = mu + std * rng.standard_normal(self.action_dim)
        return action, self._log_prob(action, mu)

    def _log_prob(self, action, mu):
        z = (action - mu) / np.exp(self.log_std)
        return float(
            -0.5 * np.dot(z, z) - self.log_std.sum() - 0.5 * self.action_dim * _LOG_2PI
        )

    def log_probs(self, obs_batch, actions):
        """Batch log-probabilities under the current parameters."""
        mu = forward(self.spec, self.params, obs_batch)
        z = (actions - mu) * np.exp(-self.log_std)
        return (
            -0.5 * np.einsum("ij,ij->i", z, z)
            - self.log_std.sum()
            - 0.5 * self.action_dim * _LOG_2PI
        )


class ValueNet:
    def __init__(self, spec, params):
        self.spec = spec
        self.params = params

    @classmethod
    def create(cls, obs_dim, hidden=DEFAULT_HIDDEN, rng=None):
        spec = MlpSpec(obs_dim, tuple(hidden), 1, hidden_activation="tanh")
        rng = rng or np.random.default_rng()
        return cls(spec, init_params(spec, rng))

    def predict(self, states):
        states = np.atleast_2d(states)
        return forward(self.spec, self.params, states)[:, 0]


def save_policy(path, policy, meta=None):
    from ..nn import save_mlp

    header = {"kind": "gaussian_policy"}
    header.update(meta or {})
    save_mlp(path, policy.spec, policy.params, arrays={"log_std": policy.log_std}, meta=header)


def load_policy(path):
    from ..errors import PersistError
    from ..nn import load_mlp

    spec, params, arrays, meta = load_mlp(path)
    if meta.get("kind") != "gaussian_policy":
        raise PersistError(f"{path} is not a policy file")
    if "log_std" not in arrays:
        raise PersistError(f"{path} is missing the log_std array")
    flat = np.concatenate([params, np.asarray(arrays["log_std"], dtype=np.float64)])
    return GaussianPolicy(spec, flat)
