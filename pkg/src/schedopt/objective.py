"""Weighted-KPI scalar reward: r = sum_i weight_i * normalized_kpi_i.

Weights are validated in integer hundredths so "sums to 1" is checked without
floating-point drift. Normalization bounds are fixed schema constants, never
data-driven, so rewards stay comparable across epochs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

from .errors import ConfigurationError, MissingKpiError


class Direction(str, Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


@dataclass(frozen=True)
class ObjectiveEntry:
    kpi_name: str
    weight: float
    lo: float
    hi: float
    direction: Direction = Direction.MAXIMIZE

    def __post_init__(self):
        if not 0.0 <= self.weight <= 1.0:
            raise ConfigurationError(f"{self.kpi_name}: weight {self.weight} outside [0, 1]")
        if not self.lo < self.hi:
            raise ConfigurationError(f"{self.kpi_name}: lo must be < hi")

    @property
    def weight_hundredths(self) -> int:
        h = round(self.weight * 100)
        if abs(self.weight * 100 - h) > 1e-9:
            raise ConfigurationError(f"{self.kpi_name}: weight {self.weight} is not a whole percent")
        return int(h)


@dataclass(frozen=True)
class ObjectiveConfig:
    entries: tuple[ObjectiveEntry, ...]

    def __post_init__(self):
        names = [e.kpi_name for e in self.entries]
        if len(set(names)) != len(names):
            raise ConfigurationError("duplicate KPI in objective")
        total = sum(e.weight_hundredths for e in self.entries)
        if total != 100:
            raise ConfigurationError(f"KPI weights must sum to exactly 100%, got {total}%")

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {
                    "kpi": e.kpi_name,
                    "weight": e.weight,
                    "lo": e.lo,
                    "hi": e.hi,
                    "direction": e.direction.value,
                }
                for e in self.entries
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ObjectiveConfig":
        try:
            entries = tuple(
                ObjectiveEntry(
                    kpi_name=e["kpi"],
                    weight=float(e["weight"]),
                    lo=float(e["lo"]),
                    hi=float(e["hi"]),
                    direction=Direction(e.get("direction", "maximize")),
                )
                for e in data["entries"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"bad objective document: {exc}") from exc
        return cls(entries)


def normalize_kpi(value: float, entry: ObjectiveEntry) -> float:
    """Clamp-normalize a raw KPI into [0, 1]; minimize-KPIs are inverted."""
    k = (float(value) - entry.lo) / (entry.hi - entry.lo)
    k = min(max(k, 0.0), 1.0)
    if entry.direction is Direction.MINIMIZE:
        k = 1.0 - k
    return k


def reward(kpis: Union[Mapping[str, float], "object"], cfg: ObjectiveConfig) -> float:
    """Scalar weighted reward in [0, 1] for one session's KPI vector."""
    if not isinstance(kpis, Mapping):
        kpis = kpis.as_dict()
    total = 0.0
    for entry in cfg.entries:
        if entry.kpi_name not in kpis:
            raise MissingKpiError(f"objective KPI {entry.kpi_name!r} absent from KPI vector")
        total += entry.weight * normalize_kpi(kpis[entry.kpi_name], entry)
    return total


def default_objective() -> ObjectiveConfig:
    """The experiment's stated KPI priorities.

    The sixth entry (2-CCE assignment share) ships at weight 0: it is tracked
    and plotted but deliberately does not steer the search.
    """
    return ObjectiveConfig(
        entries=(
            ObjectiveEntry("dl_mac_throughput_bps", 0.22, 0.0, 1.2e9),
            ObjectiveEntry("dl_rlc_throughput_bps", 0.29, 0.0, 1.2e9),
            ObjectiveEntry("dl_ack_ratio", 0.28, 0.0, 1.0),
            ObjectiveEntry("ul_ack_ratio", 0.15, 0.0, 1.0),
            ObjectiveEntry("dl_mean_mcs", 0.06, 0.0, 27.0),
            ObjectiveEntry("cce2_utilization", 0.00, 0.0, 1.0),
        )
    )
