"""Discrete information measures of order and disorder.

All entropies are in nats. Three families are provided:

* Shannon (Jaynes) entropy ``S = -sum p ln p``
* Onicescu information energy ``E = sum p**2`` and its reciprocal ``S_E = 1/E``
* Stotland entropy ``S_F = S_0(k) + F`` where ``F`` is the excess statistical
  entropy and ``S_0(k)`` the minimum uncertainty entropy of a k-level system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .exceptions import DegenerateDistribution

#: Default tolerance on ``|sum(p) - 1|`` for a distribution.
SUM_TOLERANCE = 1e-6

#: Sum tolerance used when ingesting three-decimal tabulated probabilities.
#: Six values each rounded to 1e-3 can drift by up to 3e-3.
INGESTION_TOLERANCE = 5e-3

#: Two probabilities closer than this make the Stotland measure undefined.
DEGENERACY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NormalizedDistribution:
    """Ordered probabilities ``p_1..p_k``, each in ``(0, 1]``, summing to one.

    Parameters
    ----------
    values : iterable of float
        The probabilities. Zero entries are rejected; drop empty outcomes first.
    tolerance : float
        Allowed deviation of ``sum(values)`` from 1. Values are kept as given,
        never silently renormalized (see :meth:`renormalized`).
    """

    values: tuple[float, ...]
    tolerance: float = field(default=SUM_TOLERANCE, compare=False)

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("a distribution needs at least one probability")
        for i, v in enumerate(values):
            if not (0.0 < v <= 1.0):
                raise ValueError(f"probability #{i} = {v!r} is outside (0, 1]")
        total = math.fsum(values)
        if abs(total - 1.0) > self.tolerance:
            raise ValueError(
                f"probabilities sum to {total:.6g}, not 1 within {self.tolerance:g}"
            )

    @classmethod
    def renormalized(cls, values: Iterable[float], tolerance: float = SUM_TOLERANCE):
        """Divide ``values`` by their sum, then validate.

        ``tolerance`` still applies to the *raw* sum, so grossly wrong input is
        refused rather than rescaled.
        """
        raw = [float(v) for v in values]
        total = math.fsum(raw)
        if not raw or abs(total - 1.0) > tolerance:
            raise ValueError(
                f"probabilities sum to {total:.6g}, not 1 within {tolerance:g}"
            )
        return cls(tuple(v / total for v in raw), tolerance)

    @property
    def k(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _as_distribution(dist) -> NormalizedDistribution:
    if isinstance(dist, NormalizedDistribution):
        return dist
    return NormalizedDistribution(tuple(dist))


@dataclass(frozen=True)
class GaussianParams:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma!r}")


@dataclass(frozen=True)
class EntropyReport:
    """All discrete measures of one distribution.

    The Stotland fields are ``None`` when the distribution has repeated
    probabilities; ``degenerate`` is then ``True``.
    """

    k: int
    shannon_jaynes: float
    onicescu_energy: float
    minimum_uncertainty: float
    stotland_excess: Optional[float]
    stotland_total: Optional[float]

    @property
    def onicescu_information(self) -> float:
        return 1.0 / self.onicescu_energy

    @property
    def degenerate(self) -> bool:
        return self.stotland_excess is None


def shannon_entropy(dist) -> float:
    """Shannon (Jaynes) entropy ``-sum p ln p`` in nats."""
    p = _as_distribution(dist).values
    return 0.0 - math.fsum(v * math.log(v) for v in p)


def onicescu_energy(dist) -> float:
    """Information energy ``sum p**2``, between ``1/k`` and 1."""
    p = _as_distribution(dist).values
    return math.fsum(v * v for v in p)


def onicescu_information(dist) -> float:
    """Information content ``1/E``, between 1 and ``k``."""
    return 1.0 / onicescu_energy(dist)


def minimum_uncertainty_entropy(k: int) -> float:
    """``S_0(k) = sum_{i=2..k} 1/i``; zero for a single level."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    return math.fsum(1.0 / i for i in range(2, int(k) + 1))


def closest_pair(values: Sequence[float]) -> tuple[int, int, float]:
    """Indices and absolute gap of the two closest values (``k >= 2``)."""
    order = sorted(range(len(values)), key=values.__getitem__)
    best = (order[0], order[1], math.inf)
    for a, b in zip(order, order[1:]):
        gap = values[b] - values[a]
        if gap < best[2]:
            best = (a, b, gap)
    return best


def stotland_terms(dist) -> list[float]:
    """Summands of ``-F``: ``[prod_{s != r} p_r / (p_r - p_s)] p_r ln p_r``.

    No degeneracy check is made here; repeated values give ``inf``/``nan``.
    """
    p = _as_distribution(dist).values
    terms = []
    for r, pr in enumerate(p):
        weight = 1.0
        for s, ps in enumerate(p):
            if s != r:
                weight *= pr / (pr - ps)
        terms.append(weight * pr * math.log(pr))
    return terms


def stotland_excess(dist, degeneracy_tolerance: float = DEGENERACY_TOLERANCE) -> float:
    """Excess statistical entropy ``F`` in nats.

    The individual terms are large and of alternating sign when probabilities
    are close, so they are combined with an exactly rounded sum.

    Raises
    ------
    DegenerateDistribution
        If two probabilities differ by less than ``degeneracy_tolerance``.
    """
    if not degeneracy_tolerance > 0:
        raise ValueError("degeneracy_tolerance must be positive")
    dist = _as_distribution(dist)
    if dist.k >= 2:
        i, j, gap = closest_pair(dist.values)
        if gap < degeneracy_tolerance:
            raise DegenerateDistribution(i, j, dist.values[i], dist.values[j])
    return 0.0 - math.fsum(stotland_terms(dist))


def stotland_excess_two_level(p: float) -> float:
    """Closed form of ``F`` for ``k = 2`` with probabilities ``(p, 1 - p)``."""
    q = 1.0 - p
    return -(p * p * math.log(p) - q * q * math.log(q)) / (p - q)


def stotland_entropy(dist, degeneracy_tolerance: float = DEGENERACY_TOLERANCE) -> float:
    """Stotland entropy ``S_F = S_0(k) + F`` in nats."""
    dist = _as_distribution(dist)
    return minimum_uncertainty_entropy(dist.k) + stotland_excess(dist, degeneracy_tolerance)


def full_report(dist, degeneracy_tolerance: float = DEGENERACY_TOLERANCE) -> EntropyReport:
    dist = _as_distribution(dist)
    s0 = minimum_uncertainty_entropy(dist.k)
    try:
        excess = stotland_excess(dist, degeneracy_tolerance)
    except DegenerateDistribution:
        excess = total = None
    else:
        total = s0 + excess
    return EntropyReport(
        k=dist.k,
        shannon_jaynes=shannon_entropy(dist),
        onicescu_energy=onicescu_energy(dist),
        minimum_uncertainty=s0,
        stotland_excess=excess,
        stotland_total=total,
    )


def gaussian_information_energy(params: GaussianParams) -> float:
    """Information energy of a 1D Gaussian, ``1 / (2 sigma sqrt(pi))``."""
    if not isinstance(params, GaussianParams):
        params = GaussianParams(*params)
    return 1.0 / (2.0 * params.sigma * math.sqrt(math.pi))
