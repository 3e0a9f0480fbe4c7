"""Counter-based random streams.

Every random draw in the package comes from a Philox generator whose key is
derived from the master seed plus a tuple of integers naming the consumer
(domain tag, iteration, agent, frame, ...). Two consumers with different keys
never share state, so the order in which work is evaluated cannot change the
numbers anyone sees.
"""

import numpy as np

# Domain tags keep streams of different subsystems apart.
USERS = 1
WOA_INIT = 2
WOA_STEP = 3
PSO_INIT = 4
PSO_STEP = 5
CHURN = 6
REOPT = 7
SWEEP = 8
COMPARE = 9

_MASK64 = (1 << 64) - 1


def stream(seed, *key):
    """Return a fresh generator for ``(seed, *key)``."""
    ss = np.random.SeedSequence(int(seed) & _MASK64, spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed, *key):
    """A 64-bit child seed, e.g. for one point of a sweep."""
    ss = np.random.SeedSequence(int(seed) & _MASK64, spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
