"""Sequential discovery of multiple distinct policies for one task.

Core pieces: a minimal dense-network engine (``tnb.nn``), reconstructed
benchmark environments (``tnb.envs``), an autoencoder-based novelty reward
(``tnb.novelty``), two-objective PPO machinery (``tnb.pg``), and a trial
orchestrator plus CLI.
"""

__version__ = "0.1.0"
