"""Deterministic uniform generator shared by Python code and numba kernels.

splitmix64 with an explicit uint64 state that lives in a one-element numpy
array, so the same stream can be consumed alternately from Python and from
jitted kernels. Streams derived from the same seed with different stream ids
are independent for our purposes (MCMC sweeps, tie-breaking draws).
"""

from __future__ import annotations

import numpy as np
from numba import njit

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, nogil=True)
def next_uniform(state):
    """Advance `state` in place and return a float64 uniform in [0, 1)."""
    state[0] += _GOLDEN
    s = state[0]
    s = (s ^ (s >> np.uint64(30))) * _MIX1
    s = (s ^ (s >> np.uint64(27))) * _MIX2
    s = s ^ (s >> np.uint64(31))
    return (s >> np.uint64(11)) * _INV_2_53


def make_state(seed: int, stream: int = 0) -> np.ndarray:
    """Build a kernel-ready state array for (seed, stream).

    The seed/stream pair is scrambled through two splitmix rounds so that
    nearby seeds do not produce overlapping streams.
    """
    s = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) * np.uint64(0x2545F4914F6CDD1D)
    s ^= np.uint64(stream & 0xFFFFFFFFFFFFFFFF) * _MIX1
    state = np.array([s], dtype=np.uint64)
    next_uniform(state)
    next_uniform(state)
    return state


class UniformStream:
    """Python-side view of a splitmix64 stream; shares state with kernels."""

    def __init__(self, seed: int, stream: int = 0):
        self.state = make_state(seed, stream)

    def uniform(self) -> float:
        return float(next_uniform(self.state))

    def integers(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return int(self.uniform() * n)
