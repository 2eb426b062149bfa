"""Rayleigh fading, receiver noise, and SNR bookkeeping.

Conventions used throughout the package: each channel state is a
unit-variance circularly-symmetric complex Gaussian (real and imaginary
parts N(0, 1/2) each), and receiver noise has total complex variance
N0 = 1/snr split evenly across the two dimensions. These are the
normalizations under which the closed forms in :mod:`bmbmsim.analytic`
hold for a unit-power transmitter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ComplexSample",
    "ChannelPair",
    "Snr",
    "RngStream",
    "db_to_linear",
    "linear_to_db",
    "sample_channel_pair",
    "sample_channel_pairs",
    "sample_noise",
]

# A complex baseband sample. Plain python/numpy complex scalars are used for
# single samples; every operation in the package also accepts equally shaped
# numpy arrays in these positions and then works elementwise.
ComplexSample = complex


def db_to_linear(db):
    """Convert decibels to a linear power ratio."""
    return 10.0 ** (db / 10.0)


def linear_to_db(linear):
    """Convert a positive linear power ratio to decibels."""
    if np.any(np.asarray(linear) <= 0.0):
        raise ValueError(f"linear ratio must be positive, got {linear!r}")
    return 10.0 * np.log10(linear)


@dataclass(frozen=True)
class Snr:
    """A signal-to-noise ratio carried in both linear and dB form.

    For a unit-power transmitter the receiver noise variance is
    ``1/linear``. Build instances through :meth:`from_db` or
    :meth:`from_linear`; the constructor rejects inconsistent pairs.
    """

    linear: float
    db: float

    def __post_init__(self):
        if not (self.linear > 0.0 and math.isfinite(self.linear)):
            raise ValueError(f"SNR must be positive and finite, got {self.linear!r}")
        if abs(self.db - 10.0 * math.log10(self.linear)) > 1e-9 * max(1.0, abs(self.db)):
            raise ValueError(
                f"inconsistent SNR pair: linear={self.linear!r}, db={self.db!r}"
            )

    @classmethod
    def from_db(cls, db: float) -> "Snr":
        return cls(linear=float(db_to_linear(db)), db=float(db))

    @classmethod
    def from_linear(cls, linear: float) -> "Snr":
        return cls(linear=float(linear), db=float(linear_to_db(linear)))

    @property
    def noise_variance(self) -> float:
        """Total complex noise variance N0 at the receiver."""
        return 1.0 / self.linear


@dataclass
class RngStream:
    """A seeded, independently addressable random substream.

    Equal ``(seed, stream_id)`` pairs replay identical sample sequences;
    distinct ``stream_id`` values give statistically independent streams
    (numpy ``SeedSequence`` keying, no sequence splitting). Draws come from
    PCG64, whose ``standard_normal`` is the ziggurat method. The generator
    cursor is the only mutable state.
    """

    seed: int
    stream_id: int = 0
    _generator: np.random.Generator | None = field(
        default=None, init=False, repr=False, compare=False
    )

    @property
    def gen(self) -> np.random.Generator:
        if self._generator is None:
            self._generator = np.random.default_rng([self.seed, self.stream_id])
        return self._generator


@dataclass(frozen=True)
class ChannelPair:
    """The two fading realizations seen through the two mirror states."""

    h0: ComplexSample
    h1: ComplexSample


def _complex_gaussian(gen: np.random.Generator, size: int, total_variance: float):
    """Circularly-symmetric complex Gaussian, variance split per dimension."""
    scale = math.sqrt(total_variance / 2.0)
    parts = gen.standard_normal((2, size))
    return (parts[0] + 1j * parts[1]) * scale


def sample_channel_pairs(rng: RngStream, n: int) -> ChannelPair:
    """Draw ``n`` independent unit-variance channel pairs (array fields)."""
    h0 = _complex_gaussian(rng.gen, n, 1.0)
    h1 = _complex_gaussian(rng.gen, n, 1.0)
    return ChannelPair(h0, h1)


def sample_channel_pair(rng: RngStream) -> ChannelPair:
    """Draw one independent unit-variance channel pair."""
    pairs = sample_channel_pairs(rng, 1)
    return ChannelPair(complex(pairs.h0[0]), complex(pairs.h1[0]))


def sample_noise(rng: RngStream, snr: Snr, size: int | None = None):
    """Receiver noise with total complex variance ``1/snr.linear``.

    Returns a scalar when ``size`` is None, else an array of ``size`` draws.
    """
    z = _complex_gaussian(rng.gen, 1 if size is None else size, snr.noise_variance)
    return complex(z[0]) if size is None else z
