"""Discrete densities, positive measures, and skew mixing profiles.

A :class:`DiscreteDensity` is a point on the probability simplex stored as a
read-only float64 vector.  A :class:`PositiveDensity` drops the
unit-normalization requirement and carries an arbitrary positive total mass.
A :class:`SkewProfile` bundles the interpolation parameters ``alphas`` and
their convex weights used by the skewed divergences and centroid solvers.

Statistical mixtures ``(1-a) p + a q`` are produced by :func:`mix`, which
keeps the endpoints bit-exact and returns the input unchanged when both
arguments coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import comp_sum, dot_sum

__all__ = [
    "DiscreteDensity",
    "PositiveDensity",
    "SkewProfile",
    "mix",
    "normalize",
    "support",
]

#: Densities whose bins sum to 1 within this tolerance are accepted and then
#: renormalized; anything further off is rejected as malformed input.
SUM_TOLERANCE = 1e-9

#: Convex weight vectors must sum to 1 within this tolerance.
WEIGHT_TOLERANCE = 1e-12


def _as_bins(values, name: str) -> np.ndarray:
    bins = np.array(values, dtype=np.float64, copy=True)
    if bins.ndim != 1 or bins.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-D vector")
    if not np.all(np.isfinite(bins)):
        raise ValueError(f"{name} must be finite")
    if np.any(bins < 0.0):
        raise ValueError(f"{name} must be non-negative")
    return np.ascontiguousarray(bins)


@dataclass(frozen=True, eq=False)
class DiscreteDensity:
    """A probability vector over ``d`` histogram bins.

    Parameters
    ----------
    bins:
        Non-negative vector summing to 1 within ``SUM_TOLERANCE``.  The
        stored array is an exactly renormalized read-only copy, so instances
        can be shared freely.
    """

    bins: np.ndarray

    def __post_init__(self) -> None:
        bins = _as_bins(self.bins, "bins")
        total = comp_sum(bins)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(
                f"bins sum to {total!r}; expected 1 within {SUM_TOLERANCE}"
            )
        if total != 1.0:
            bins = bins / total
        bins.flags.writeable = False
        object.__setattr__(self, "bins", bins)

    @classmethod
    def _wrap(cls, bins: np.ndarray) -> "DiscreteDensity":
        """Wrap an already-normalized internal array without revalidating.

        Used for mixture outputs so affine combinations of densities are
        preserved bit-for-bit instead of being renormalized again.
        """
        obj = object.__new__(cls)
        bins = np.ascontiguousarray(bins, dtype=np.float64)
        bins.flags.writeable = False
        object.__setattr__(obj, "bins", bins)
        return obj

    @property
    def dim(self) -> int:
        return self.bins.shape[0]

    def __repr__(self) -> str:
        return f"DiscreteDensity({np.array2string(self.bins, threshold=8)})"


@dataclass(frozen=True, eq=False)
class PositiveDensity:
    """An unnormalized non-negative measure over histogram bins."""

    bins: np.ndarray

    def __post_init__(self) -> None:
        bins = _as_bins(self.bins, "bins")
        if comp_sum(bins) <= 0.0:
            raise ValueError("total mass must be positive")
        bins.flags.writeable = False
        object.__setattr__(self, "bins", bins)

    @classmethod
    def _wrap(cls, bins: np.ndarray) -> "PositiveDensity":
        obj = object.__new__(cls)
        bins = np.ascontiguousarray(bins, dtype=np.float64)
        bins.flags.writeable = False
        object.__setattr__(obj, "bins", bins)
        return obj

    @property
    def dim(self) -> int:
        return self.bins.shape[0]

    @property
    def mass(self) -> float:
        return comp_sum(self.bins)

    def normalized(self) -> DiscreteDensity:
        return normalize(self.bins)

    def __repr__(self) -> str:
        return f"PositiveDensity({np.array2string(self.bins, threshold=8)})"


@dataclass(frozen=True, eq=False)
class SkewProfile:
    """Skew parameters ``alphas`` in ``[0, 1]^k`` with convex weights.

    The weighted average ``alpha_bar`` determines the reference mixture of
    the skewed divergences; most operations require it to lie strictly
    inside ``(0, 1)``.
    """

    alphas: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        alphas = np.array(self.alphas, dtype=np.float64, copy=True)
        weights = np.array(self.weights, dtype=np.float64, copy=True)
        if alphas.ndim != 1 or alphas.size == 0:
            raise ValueError("alphas must be a non-empty 1-D vector")
        if weights.shape != alphas.shape:
            raise ValueError(
                f"weights shape {weights.shape} does not match alphas shape "
                f"{alphas.shape}"
            )
        if not np.all(np.isfinite(alphas)) or np.any(alphas < 0.0) or np.any(
            alphas > 1.0
        ):
            raise ValueError("alphas must lie in [0, 1]")
        if not np.all(np.isfinite(weights)) or np.any(weights <= 0.0):
            raise ValueError("weights must be strictly positive")
        total = comp_sum(weights)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError(
                f"weights sum to {total!r}; expected 1 within {WEIGHT_TOLERANCE}"
            )
        alphas.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def plain_js(cls) -> "SkewProfile":
        """The profile ``alphas=(0, 1)``, ``weights=(1/2, 1/2)``.

        With it the skewed divergence reduces to the ordinary
        Jensen-Shannon divergence.
        """
        return cls(np.array([0.0, 1.0]), np.array([0.5, 0.5]))

    @property
    def k(self) -> int:
        return self.alphas.shape[0]

    @property
    def alpha_bar(self) -> float:
        return dot_sum(self.weights, self.alphas)

    @property
    def is_interior(self) -> bool:
        bar = self.alpha_bar
        return 0.0 < bar < 1.0

    def require_interior(self) -> float:
        bar = self.alpha_bar
        if not 0.0 < bar < 1.0:
            raise ValueError(
                f"profile average skew {bar!r} must lie strictly in (0, 1)"
            )
        return bar

    def __repr__(self) -> str:
        return (
            f"SkewProfile(alphas={self.alphas.tolist()}, "
            f"weights={self.weights.tolist()})"
        )


def mix_bins(x: np.ndarray, y: np.ndarray, a: float) -> np.ndarray:
    """Affine bin combination ``(1-a) x + a y`` with exact endpoints.

    Computed as ``x + a (y - x)`` so ``mix_bins(x, x, a)`` returns ``x``
    bit-for-bit for any ``a``.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"interpolation parameter {a!r} must lie in [0, 1]")
    if a == 0.0:
        return x.copy()
    if a == 1.0:
        return y.copy()
    return x + a * (y - x)


def mix(p, q, a: float):
    """Statistical mixture ``(1-a) p + a q`` of two same-kind densities."""
    if type(p) is not type(q) or not isinstance(
        p, (DiscreteDensity, PositiveDensity)
    ):
        raise ValueError("mix requires two densities of the same kind")
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return type(p)._wrap(mix_bins(p.bins, q.bins, a))


def normalize(values) -> DiscreteDensity:
    """Scale a non-negative vector to unit total mass.

    The vector is first divided by its largest entry so that extremely small
    inputs (counts around 1e-300) normalize without underflowing, then
    divided by its compensated sum.
    """
    if isinstance(values, (DiscreteDensity, PositiveDensity)):
        values = values.bins
    bins = _as_bins(values, "values")
    peak = bins.max()
    if peak <= 0.0:
        raise ValueError("cannot normalize a vector of zero total mass")
    scaled = bins / peak
    scaled /= comp_sum(scaled)
    return DiscreteDensity._wrap(scaled)


def support(p) -> np.ndarray:
    """Indices of strictly positive bins, in increasing order (0-based)."""
    if isinstance(p, (DiscreteDensity, PositiveDensity)):
        bins = p.bins
    else:
        bins = np.asarray(p, dtype=np.float64)
    return np.flatnonzero(bins > 0.0)
