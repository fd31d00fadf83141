"""Difference-coarray computations for integer-grid sparse linear arrays.

Sensor positions live on the half-wavelength grid, so every quantity here is
exact integer combinatorics: the difference multiset of all ordered sensor
pairs, its distinct support (the difference coarray), the lags missing from
a contiguous coarray (holes), and the per-lag multiplicities (the weight
function).

Two deliberately independent routes compute weights:

* :func:`weight_function` histograms the explicit pair differences.
* :func:`primary_weights` / :func:`indicator_autocorrelation` autocorrelate
  a 0/1 occupancy sequence over the normalized grid.

They must agree at every lag; the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

# Resource guard: the hole scan is dense over [-A, A] and the pair histogram
# touches all N^2 differences, so both dimensions stay bounded.
MAX_SENSORS = 10_000
MAX_APERTURE = 1_000_000

# Fixed status wording; corpus tests and the UI badge compare bit-exactly.
HOLE_FREE_TEXT = "Coarray is hole-free"
HOLES_TEXT = "Coarray has holes"


class ResourceLimitError(ValueError):
    """Array exceeds the sensor-count or aperture guard."""


@dataclass(frozen=True)
class SensorArray:
    """Physical sensor positions in half-wavelength units, strictly increasing."""

    positions: tuple[int, ...]

    def __post_init__(self):
        if not self.positions:
            raise ValueError("sensor array needs at least one position")
        for p in self.positions:
            if isinstance(p, bool) or not isinstance(p, int):
                raise ValueError(f"sensor position {p!r} is not an integer")
        for a, b in zip(self.positions, self.positions[1:]):
            if a >= b:
                raise ValueError(
                    f"positions must be strictly increasing, got {a} before {b}"
                )
        if self.count > MAX_SENSORS:
            raise ResourceLimitError(
                f"{self.count} sensors exceeds the limit of {MAX_SENSORS}"
            )
        if self.aperture > MAX_APERTURE:
            raise ResourceLimitError(
                f"aperture {self.aperture} exceeds the limit of {MAX_APERTURE}"
            )

    @classmethod
    def from_positions(cls, values: Iterable[int]) -> "SensorArray":
        """Build from any iterable of integers; sorts and rejects duplicates."""
        cleaned = []
        for v in values:
            if isinstance(v, bool):
                raise ValueError(f"sensor position {v!r} is not an integer")
            if isinstance(v, (int, np.integer)):
                cleaned.append(int(v))
            else:
                raise ValueError(f"sensor position {v!r} is not an integer")
        ordered = sorted(cleaned)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate sensor position {a}")
        return cls(tuple(ordered))

    @property
    def count(self) -> int:
        return len(self.positions)

    @property
    def aperture(self) -> int:
        """max - min, in half-wavelength units."""
        return self.positions[-1] - self.positions[0]


@dataclass(frozen=True)
class NormalizedArray:
    """Sensor positions shifted so the first sensor sits at 0."""

    positions: tuple[int, ...]
    aperture: int


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """Multiplicity w(m) of every lag m in [-A, A], zeros included."""

    aperture: int
    counts: np.ndarray  # length 2A + 1, lag m stored at index m + A

    def __post_init__(self):
        self.counts.setflags(write=False)

    def weight(self, lag: int) -> int:
        """w(lag); lags beyond the aperture carry weight 0."""
        if abs(lag) > self.aperture:
            return 0
        return int(self.counts[lag + self.aperture])

    def pairs(self) -> list[tuple[int, int]]:
        """(lag, weight) for every lag in [-A, A], ascending."""
        a = self.aperture
        return [(m - a, int(w)) for m, w in enumerate(self.counts)]

    @property
    def sensor_count(self) -> int:
        """w(0) = N."""
        return int(self.counts[self.aperture])


@dataclass(frozen=True)
class CoarrayAnalysis:
    """Full coarray summary of one sensor array."""

    source: SensorArray
    normalized: NormalizedArray
    aperture: int
    dca: tuple[int, ...]
    holes: tuple[int, ...]
    hole_free: bool
    weight_function: WeightFunction
    primary_weights: tuple[int, int, int]

    @property
    def status(self) -> str:
        return HOLE_FREE_TEXT if self.hole_free else HOLES_TEXT


@dataclass(frozen=True)
class ComparisonReport:
    """Two analyses side by side, with per-metric deltas (a minus b)."""

    a: CoarrayAnalysis
    b: CoarrayAnalysis
    aperture_delta: int
    sensor_count_delta: int
    primary_weight_delta: tuple[int, int, int]
    hole_set_delta: tuple[int, ...]  # symmetric difference of the hole sets


def as_sensor_array(array) -> SensorArray:
    """Coerce a SensorArray or any iterable of integers into a SensorArray."""
    if isinstance(array, SensorArray):
        return array
    return SensorArray.from_positions(array)


def normalize(array) -> NormalizedArray:
    """Shift positions by -min so the grid starts at 0.

    The difference multiset is translation invariant, so every coarray
    quantity of the normalized array matches the original; normalizing
    first makes the occupancy-indicator formulas valid for arrays that
    start at negative positions.
    """
    sa = as_sensor_array(array)
    low = sa.positions[0]
    return NormalizedArray(
        positions=tuple(p - low for p in sa.positions),
        aperture=sa.aperture,
    )


def _pair_counts(sa: SensorArray) -> np.ndarray:
    """Histogram of all N^2 ordered pair differences, index = lag + A."""
    pos = np.asarray(normalize(sa).positions, dtype=np.int64)
    aperture = sa.aperture
    n = len(pos)
    counts = np.zeros(2 * aperture + 1, dtype=np.int64)
    # Row blocks keep the temporary difference matrix small; memory stays
    # O(A + block * N) instead of O(N^2).
    block = max(1, min(n, (1 << 22) // n))
    for start in range(0, n, block):
        diffs = pos[start : start + block, None] - pos[None, :] + aperture
        counts += np.bincount(diffs.ravel(), minlength=2 * aperture + 1)
    return counts


def difference_set(array) -> dict[int, int]:
    """Multiset of all ordered pair differences, as a lag -> count map.

    Counts sum to N^2 exactly; lags that never occur are absent.
    """
    sa = as_sensor_array(array)
    counts = _pair_counts(sa)
    a = sa.aperture
    support = np.nonzero(counts)[0]
    return {int(i - a): int(counts[i]) for i in support}


def difference_coarray(array) -> list[int]:
    """Sorted distinct lags realized by the array (symmetric, contains 0)."""
    sa = as_sensor_array(array)
    counts = _pair_counts(sa)
    return [int(i - sa.aperture) for i in np.nonzero(counts)[0]]


def weight_function(array) -> WeightFunction:
    """Multiplicity of every lag in [-A, A], from explicit pair counting."""
    sa = as_sensor_array(array)
    return WeightFunction(aperture=sa.aperture, counts=_pair_counts(sa))


def holes(array) -> list[int]:
    """All lags in [-A, A] missing from the difference coarray, both signs."""
    sa = as_sensor_array(array)
    counts = _pair_counts(sa)
    return [int(i - sa.aperture) for i in np.nonzero(counts == 0)[0]]


def is_hole_free(array) -> bool:
    """True iff the coarray covers [-A, A] contiguously (|DCA| = 2A + 1)."""
    sa = as_sensor_array(array)
    counts = _pair_counts(sa)
    return int(np.count_nonzero(counts)) == 2 * sa.aperture + 1


def _indicator(sa: SensorArray) -> np.ndarray:
    """0/1 occupancy sequence over the normalized grid 0..A."""
    norm = normalize(sa)
    y = np.zeros(norm.aperture + 1, dtype=np.int64)
    y[np.asarray(norm.positions, dtype=np.int64)] = 1
    return y


def indicator_autocorrelation(array) -> np.ndarray:
    """Autocorrelation of the occupancy indicator at lags 0..A.

    Independent of the pair-counting route: correlates the 0/1 grid
    sequence with itself (direct correlation for small apertures, FFT with
    rounding for large ones) instead of enumerating sensor pairs.
    """
    sa = as_sensor_array(array)
    y = _indicator(sa)
    length = len(y)
    if length <= 4096:
        full = np.correlate(y, y, mode="full")
        return full[length - 1 :].astype(np.int64)
    # FFT route: pad so circular correlation equals linear correlation.
    size = 1 << (2 * length - 1).bit_length()
    spectrum = np.fft.rfft(y, size)
    corr = np.fft.irfft(spectrum * np.conj(spectrum), size)
    return np.rint(corr[:length]).astype(np.int64)


def primary_weights(array) -> tuple[int, int, int]:
    """(w(1), w(2), w(3)) read off the indicator autocorrelation.

    The first three weights are the conventional summary of how exposed an
    array is to mutual coupling; lags beyond the aperture return 0.
    """
    sa = as_sensor_array(array)
    y = _indicator(sa)
    out = []
    for m in (1, 2, 3):
        if m > sa.aperture:
            out.append(0)
        else:
            out.append(int(y[:-m] @ y[m:]))
    return (out[0], out[1], out[2])


def analyze(array) -> CoarrayAnalysis:
    """Compute the full coarray summary in one consistent record."""
    sa = as_sensor_array(array)
    norm = normalize(sa)
    counts = _pair_counts(sa)
    a = sa.aperture
    dca = tuple(int(i - a) for i in np.nonzero(counts)[0])
    hole_list = tuple(int(i - a) for i in np.nonzero(counts == 0)[0])
    return CoarrayAnalysis(
        source=sa,
        normalized=norm,
        aperture=a,
        dca=dca,
        holes=hole_list,
        hole_free=not hole_list,
        weight_function=WeightFunction(aperture=a, counts=counts),
        primary_weights=primary_weights(sa),
    )


def compare(a, b) -> ComparisonReport:
    """Analyze two arrays and report per-metric deltas (a minus b)."""
    ra = analyze(a)
    rb = analyze(b)
    return ComparisonReport(
        a=ra,
        b=rb,
        aperture_delta=ra.aperture - rb.aperture,
        sensor_count_delta=ra.source.count - rb.source.count,
        primary_weight_delta=tuple(
            x - y for x, y in zip(ra.primary_weights, rb.primary_weights)
        ),
        hole_set_delta=tuple(sorted(set(ra.holes) ^ set(rb.holes))),
    )
