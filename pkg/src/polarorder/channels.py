"""Erasure-channel model and exact synthetic-channel reliability.

For a binary erasure channel the polarization recursion is exact: a 0
step maps z to z*(2-z), a 1 step maps z to z*z, starting from the
erasure probability and consuming the index bits MSB-first.  The result
is simultaneously the Bhattacharyya parameter and the erasure
probability of the synthetic channel, so every reliability query is
deterministic and cheap.

The 0 step is computed as ``z * (2.0 - z)`` (one product, one rounding)
and the bit order is fixed, which makes the scalar and vector paths
bit-identical.

Final values closer to 1 than ``SATURATION_BAND`` are reported as
exactly 1.0.  Accumulated rounding there exceeds the remaining gap, so
those channels are indistinguishable at double precision; collapsing
them to a shared value keeps reliabilities weakly decreasing along
upgrade chains, which the constructors rely on.  (Near 0 the same
collapse happens naturally through underflow.)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .index_poset import ChannelIndex

ALL_Z_N_MAX = 20
SATURATION_BAND = 2.0 ** -44


@dataclass(frozen=True)
class BmsChannelModel:
    """A parameterized binary memoryless symmetric channel.

    Only the erasure channel (`kind="bec"`) is implemented; the single
    evaluation entry point below is the extension surface for other
    channel families.
    """

    kind: str
    parameter: float

    def __post_init__(self) -> None:
        if self.kind != "bec":
            raise ValueError(
                f"unsupported channel kind {self.kind!r}; only 'bec'")
        if not 0.0 <= self.parameter <= 1.0:
            raise ValueError(
                f"erasure probability must be in [0, 1], got {self.parameter}")

    @classmethod
    def bec(cls, epsilon: float) -> "BmsChannelModel":
        return cls("bec", float(epsilon))


def parse_channel_spec(spec: str) -> BmsChannelModel:
    """Parse a channel spec string of the form ``bec:<epsilon>``."""
    kind, sep, param = spec.partition(":")
    if not sep or kind != "bec":
        raise ValueError(f"bad channel spec {spec!r}; expected 'bec:<epsilon>'")
    try:
        epsilon = float(param)
    except ValueError:
        raise ValueError(f"bad erasure probability in {spec!r}") from None
    return BmsChannelModel.bec(epsilon)


class EvaluationCounter:
    """Thread-safe, monotone tally of reliability evaluations."""

    def __init__(self) -> None:
        self._count = 0
        self._lock = threading.Lock()

    @property
    def count(self) -> int:
        return self._count

    def increment(self, amount: int = 1) -> None:
        with self._lock:
            self._count += amount


def bhattacharyya(model: BmsChannelModel, i: ChannelIndex) -> float:
    """Exact reliability of synthetic channel ``i`` (smaller is better)."""
    z = model.parameter
    value = i.value
    for k in range(i.n - 1, -1, -1):
        if (value >> k) & 1:
            z = z * z
        else:
            z = z * (2.0 - z)
    if z > 1.0 - SATURATION_BAND:
        return 1.0
    return z


def counted_bhattacharyya(model: BmsChannelModel, i: ChannelIndex,
                          counter: EvaluationCounter) -> float:
    """Same value as :func:`bhattacharyya`; bumps ``counter`` by one."""
    counter.increment()
    return bhattacharyya(model, i)


def all_bhattacharyya(model: BmsChannelModel, n: int) -> np.ndarray:
    """Reliabilities of all 2**n synthetic channels, sharing prefix steps.

    The full binary tree costs 2^(n+1) - 2 elementary map applications;
    entry i equals the per-index value exactly (same operation order).
    """
    if not 1 <= n <= ALL_Z_N_MAX:
        raise ValueError(
            f"full sweep is capped at n={ALL_Z_N_MAX}, got {n}")
    z = np.array([model.parameter], dtype=np.float64)
    for _ in range(n):
        nxt = np.empty(2 * z.size, dtype=np.float64)
        nxt[0::2] = z * (2.0 - z)
        nxt[1::2] = z * z
        z = nxt
    return np.where(z > 1.0 - SATURATION_BAND, 1.0, z)
