"""Order-of-magnitude coherence-amplification estimates.

A coherent system of D degrees of freedom multiplies the per-degree
quantization correction delta^2 into the figure of merit D * delta^2.
delta comes from a microscopic/macroscopic length ratio, (micro/macro)^2,
or can be supplied directly when only its magnitude is quoted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .analytic import DeltaParameter

__all__ = [
    "StarParameters",
    "EstimateReport",
    "SweepEntry",
    "delta_from_lengths",
    "amplification",
    "estimate_report",
    "report_for_star",
    "sweep",
    "order_of_magnitude",
]

SWEEPABLE_FIELDS = ("radius_cm", "particle_count", "micro_length_cm")


def order_of_magnitude(x: float) -> int | None:
    """Nearest base-10 exponent of a positive value; None for zero."""
    if x == 0.0:
        return None
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"order of magnitude needs a positive finite value, got {x!r}")
    return round(math.log10(x))


@dataclass(frozen=True)
class StarParameters:
    """Radius, particle count, and microscopic length of a coherent star."""

    radius_cm: float
    particle_count: float
    micro_length_cm: float
    label: str = ""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius_cm) and self.radius_cm > 0.0):
            raise ValueError(f"radius must be positive and finite, got {self.radius_cm!r}")
        if not (math.isfinite(self.particle_count) and self.particle_count >= 1.0):
            raise ValueError(f"particle count must be >= 1, got {self.particle_count!r}")
        if not (math.isfinite(self.micro_length_cm) and self.micro_length_cm > 0.0):
            raise ValueError(
                f"microscopic length must be positive and finite, got {self.micro_length_cm!r}"
            )
        if not self.micro_length_cm < self.radius_cm:
            raise ValueError(
                f"microscopic length {self.micro_length_cm!r} must be smaller than "
                f"the radius {self.radius_cm!r}"
            )


@dataclass(frozen=True)
class EstimateReport:
    """delta, delta^2, and the amplification D*delta^2, with echoed inputs."""

    delta: DeltaParameter
    delta_squared: float
    amplification: float
    particle_count: float
    radius_cm: float | None = None
    micro_length_cm: float | None = None
    label: str = ""
    delta_overridden: bool = False

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "particle_count": self.particle_count,
            "radius_cm": self.radius_cm,
            "micro_length_cm": self.micro_length_cm,
            "delta_overridden": self.delta_overridden,
            "delta": self.delta.value,
            "delta_squared": self.delta_squared,
            "amplification": self.amplification,
            "delta_order": order_of_magnitude(self.delta.value),
            "delta_squared_order": order_of_magnitude(self.delta_squared),
            "amplification_order": order_of_magnitude(self.amplification),
        }


@dataclass(frozen=True)
class SweepEntry:
    """One sweep point: either a report or a per-entry error message."""

    varied_field: str
    value: float
    report: EstimateReport | None = None
    error: str | None = None


def delta_from_lengths(micro: float, macro: float) -> DeltaParameter:
    """delta = (micro/macro)^2 for 0 < micro < macro."""
    if not (math.isfinite(micro) and micro > 0.0):
        raise ValueError(f"microscopic length must be positive and finite, got {micro!r}")
    if not (math.isfinite(macro) and macro > 0.0):
        raise ValueError(f"macroscopic length must be positive and finite, got {macro!r}")
    if not micro < macro:
        raise ValueError(
            f"microscopic length {micro!r} must be smaller than macroscopic length {macro!r}"
        )
    ratio = micro / macro
    return DeltaParameter(ratio * ratio)


def amplification(particle_count: float, delta: DeltaParameter) -> float:
    """The observability figure of merit D * delta^2."""
    if not particle_count >= 1.0:
        raise ValueError(f"particle count must be >= 1, got {particle_count!r}")
    return particle_count * (delta.value * delta.value)


def estimate_report(
    particle_count: float,
    delta: DeltaParameter,
    radius_cm: float | None = None,
    micro_length_cm: float | None = None,
    label: str = "",
    delta_overridden: bool = False,
) -> EstimateReport:
    return EstimateReport(
        delta=delta,
        delta_squared=delta.value * delta.value,
        amplification=amplification(particle_count, delta),
        particle_count=particle_count,
        radius_cm=radius_cm,
        micro_length_cm=micro_length_cm,
        label=label,
        delta_overridden=delta_overridden,
    )


def report_for_star(
    params: StarParameters, delta_override: DeltaParameter | None = None
) -> EstimateReport:
    """Amplification report; delta from the length ratio unless overridden."""
    if delta_override is not None:
        delta = delta_override
        overridden = True
    else:
        delta = delta_from_lengths(params.micro_length_cm, params.radius_cm)
        overridden = False
    return estimate_report(
        particle_count=params.particle_count,
        delta=delta,
        radius_cm=params.radius_cm,
        micro_length_cm=params.micro_length_cm,
        label=params.label,
        delta_overridden=overridden,
    )


def sweep(base: StarParameters, vary: str, values) -> list[SweepEntry]:
    """One report per value of the varied field, in input order.

    Invalid parameter combinations are reported per entry instead of
    aborting the sweep.
    """
    if vary not in SWEEPABLE_FIELDS:
        raise ValueError(f"vary must be one of {SWEEPABLE_FIELDS}, got {vary!r}")
    entries: list[SweepEntry] = []
    for value in values:
        value = float(value)
        try:
            params = replace(base, **{vary: value})
            entries.append(SweepEntry(vary, value, report=report_for_star(params)))
        except ValueError as exc:
            entries.append(SweepEntry(vary, value, error=str(exc)))
    return entries
