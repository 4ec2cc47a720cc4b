"""Seed derivation shared by every experiment.

Trajectory i of a run with base seed S uses the 64-bit integer carved from
sha256(f"{S}:{i}"), so any single trajectory can be replayed by external
tooling without walking the RNG stream of its predecessors.
"""

from __future__ import annotations

import hashlib
import random


def trajectory_seed(base_seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{base_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(base_seed: int, index: int) -> random.Random:
    return random.Random(trajectory_seed(base_seed, index))
