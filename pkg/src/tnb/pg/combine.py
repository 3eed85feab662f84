"""Combining the task and novelty objectives.

``combine_tnb`` follows the two-branch rule: when the gradients agree
(positive dot product) the update points along their angular bisector with
magnitude the mean gradient's projection onto it; otherwise the task
gradient is projected onto the hyperplane orthogonal to the novelty
gradient, prioritizing the task. A dot product of exactly zero takes the
projection branch, which leaves the task gradient unchanged -- so a zero
novelty gradient reduces cleanly to single-objective ascent.

``combine_wsr`` is the reward-level baseline: one stream, fixed weight.
"""

import numpy as np


def combine_bisector(g_task, g_novel):
    """Bisector-direction update; zero vector if the inputs cancel."""
    nt = np.linalg.norm(g_task)
    nn = np.linalg.norm(g_novel)
    if nt == 0.0:
        return g_novel.copy()
    if nn == 0.0:
        return g_task.copy()
    direction = g_task / nt + g_novel / nn
    dn = np.linalg.norm(direction)
    if dn < 1e-12:  # exactly opposing unit vectors: bisector undefined
        return np.zeros_like(g_task)
    direction /= dn
    magnitude = 0.5 * (g_task + g_novel) @ direction
    return magnitude * direction


def combine_projection(g_task, g_novel):
    """Component of g_task orthogonal to g_novel (g_novel = 0 passes through)."""
    n2 = g_novel @ g_novel
    if n2 == 0.0:
        return g_task.copy()
    return g_task - ((g_task @ g_novel) / n2) * g_novel


def combine_tnb(g_task, g_novel):
    if g_task @ g_novel > 0.0:
        return combine_bisector(g_task, g_novel)
    return combine_projection(g_task, g_novel)


def combine_tnb_noproj(g_task, g_novel):
    """Ablation: always the bisector, even for opposing gradients."""
    return combine_bisector(g_task, g_novel)


def combine_wsr(task_rewards, novelty_rewards, weight):
    """Weighted-sum-of-rewards stream: r_task + weight * r_novel per step."""
    return np.asarray(task_rewards) + weight * np.asarray(novelty_rewards)
