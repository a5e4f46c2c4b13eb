"""Seedable, splittable random streams.

Every stochastic routine in this package takes an explicit
``numpy.random.Generator``. Independent sub-streams are derived from a root
seed and a tuple of non-negative integers (a *stream key*) through numpy's
``SeedSequence`` spawn-key mechanism, so that e.g. sweeping the sample count
never perturbs the noise used elsewhere.

Stream purposes used by the experiment harness (first key entry):

* ``STREAM_TRAINING = 0`` -- drawing training pairs,
* ``STREAM_REFERENCE = 1`` -- simulating true-system reference trajectories,
* ``STREAM_PREDICT = 2`` -- noise draws inside stochastic prediction.
"""

from __future__ import annotations

import numpy as np

__all__ = ["STREAM_TRAINING", "STREAM_REFERENCE", "STREAM_PREDICT", "substream"]

STREAM_TRAINING = 0
STREAM_REFERENCE = 1
STREAM_PREDICT = 2


def substream(seed: int, *key: int) -> np.random.Generator:
    """Generator for the sub-stream identified by ``(seed, *key)``.

    Distinct keys give statistically independent streams; the same
    ``(seed, key)`` always reproduces the same stream.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))
