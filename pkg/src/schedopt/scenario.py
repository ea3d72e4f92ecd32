"""Cell scenarios: UE coverage profiles, app traffic phases, channel constants.

Traffic is modeled as abstract per-app packet processes, not packet-level app
emulation: each phase emits Poisson packet arrivals at its offered rate, and
speed-test phases keep the downlink buffer full. Scenario files round-trip
through a documented JSON schema (see to_json_dict / from_json_dict).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence, Union

from .errors import ConfigurationError

FULL_BUFFER = math.inf  # sentinel offered rate: traffic always waiting


class CoverageClass(str, Enum):
    EXCELLENT = "excellent"
    MEDIUM = "medium"
    POOR = "poor"


class AppKind(str, Enum):
    VIDEO_STREAM = "video_stream"
    MESSAGING = "messaging"
    SPEED_TEST = "speed_test"
    IDLE = "idle"


@dataclass(frozen=True)
class AppPhase:
    """One contiguous traffic phase of a UE."""

    app_kind: AppKind
    start_s: float
    duration_s: float
    offered_rate_bps: float

    def __post_init__(self):
        if self.duration_s <= 0:
            raise ConfigurationError(f"phase duration must be > 0, got {self.duration_s}")
        if self.start_s < 0:
            raise ConfigurationError(f"phase start must be >= 0, got {self.start_s}")
        if self.app_kind is AppKind.SPEED_TEST and not math.isinf(self.offered_rate_bps):
            raise ConfigurationError("speed_test phases are full-buffer: offered_rate_bps must be the unbounded sentinel")
        if self.app_kind is AppKind.IDLE and self.offered_rate_bps != 0:
            raise ConfigurationError("idle phases must offer 0 bps")
        if self.offered_rate_bps < 0:
            raise ConfigurationError("offered_rate_bps must be >= 0")

    @property
    def end_s(self) -> float:
        return self.start_s + self.duration_s


@dataclass(frozen=True)
class UeProfile:
    """Coverage class, channel statistics, and traffic timeline of one UE."""

    ue_id: int
    coverage_class: CoverageClass
    mean_sinr_db: float
    sinr_stddev_db: float
    traffic_profile: tuple[AppPhase, ...]

    def __post_init__(self):
        if self.sinr_stddev_db < 0:
            raise ConfigurationError(f"ue {self.ue_id}: sinr_stddev_db must be >= 0")
        phases = sorted(self.traffic_profile, key=lambda p: p.start_s)
        for a, b in zip(phases, phases[1:]):
            if b.start_s < a.end_s - 1e-9:
                raise ConfigurationError(
                    f"ue {self.ue_id}: phases overlap at {b.start_s}s ({a.app_kind.value} vs {b.app_kind.value})"
                )
        object.__setattr__(self, "traffic_profile", tuple(phases))


@dataclass(frozen=True)
class SimConfig:
    """Cell and channel constants (the scenario file's "channel" section)."""

    n_rbs: int = 273
    slots_per_second: int = 2000          # 30 kHz numerology, 0.5 ms slots
    dl_slots_per_cycle: int = 4           # fixed TDD cycle: 4 DL of every 5 slots
    cycle_slots: int = 5
    ar1_rho: float = 0.98                 # per-slot SINR autocorrelation
    bler_slope_db: float = 1.0
    pmi_gain_db: float = 1.0
    rank_penalty_db: float = 1.5          # per extra spatial layer
    p_dtx: float = 0.005
    harq_combining_gain_db: float = 3.0   # per retransmission attempt
    max_retx: int = 3
    feedback_delay_slots: int = 8
    n_harq_processes: int = 16
    olla_step_down_db: float = 0.5
    olla_clamp_db: float = 10.0
    cce_budget: int = 48
    pf_window_slots: float = 100.0        # PF throughput-average time constant
    rlc_header_overhead: float = 0.02
    video_packet_bits: int = 16_000
    messaging_packet_bits: int = 4_000
    full_buffer_bits: int = 10**11
    mcs_error_window: int = 200           # rolling initial-transmission window
    adaptive_mcs_factor: float = 2.0      # cap triggers above factor * IBLER target

    def __post_init__(self):
        if not 0 <= self.ar1_rho < 1:
            raise ConfigurationError("ar1_rho must lie in [0, 1)")
        if not 0 <= self.p_dtx < 1:
            raise ConfigurationError("p_dtx must lie in [0, 1)")
        if self.dl_slots_per_cycle > self.cycle_slots:
            raise ConfigurationError("dl_slots_per_cycle cannot exceed cycle_slots")

    @property
    def dl_slots_per_second(self) -> int:
        return self.slots_per_second * self.dl_slots_per_cycle // self.cycle_slots

    def packet_bits(self, kind: AppKind) -> int:
        if kind is AppKind.VIDEO_STREAM:
            return self.video_packet_bits
        if kind is AppKind.MESSAGING:
            return self.messaging_packet_bits
        return 0


@dataclass(frozen=True)
class Scenario:
    """A reproducible cell setup: UE profiles plus channel constants."""

    name: str
    ues: tuple[UeProfile, ...]
    sim: SimConfig = field(default_factory=SimConfig)

    def __post_init__(self):
        ids = [u.ue_id for u in self.ues]
        if len(set(ids)) != len(ids):
            raise ConfigurationError("duplicate ue_id in scenario")
        object.__setattr__(self, "ues", tuple(sorted(self.ues, key=lambda u: u.ue_id)))

    @property
    def n_ues(self) -> int:
        return len(self.ues)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "channel": {f.name: getattr(self.sim, f.name) for f in fields(SimConfig)},
            "ues": [
                {
                    "ue_id": u.ue_id,
                    "coverage_class": u.coverage_class.value,
                    "mean_sinr_db": u.mean_sinr_db,
                    "sinr_stddev_db": u.sinr_stddev_db,
                    "traffic": [
                        {
                            "app": p.app_kind.value,
                            "start_s": p.start_s,
                            "duration_s": p.duration_s,
                            "offered_rate_bps": None if math.isinf(p.offered_rate_bps) else p.offered_rate_bps,
                        }
                        for p in u.traffic_profile
                    ],
                }
                for u in self.ues
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Scenario":
        try:
            sim = SimConfig(**data.get("channel", {}))
            ues = []
            for u in data["ues"]:
                phases = []
                for p in u.get("traffic", []):
                    kind = AppKind(p["app"])
                    rate = p.get("offered_rate_bps")
                    if rate is None:
                        rate = FULL_BUFFER if kind is AppKind.SPEED_TEST else 0.0
                    phases.append(AppPhase(kind, float(p["start_s"]), float(p["duration_s"]), float(rate)))
                ues.append(
                    UeProfile(
                        ue_id=int(u["ue_id"]),
                        coverage_class=CoverageClass(u["coverage_class"]),
                        mean_sinr_db=float(u["mean_sinr_db"]),
                        sinr_stddev_db=float(u["sinr_stddev_db"]),
                        traffic_profile=tuple(phases),
                    )
                )
            return cls(name=data.get("name", "unnamed"), ues=tuple(ues), sim=sim)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"bad scenario document: {exc}") from exc

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Scenario":
        return cls.from_json_dict(json.loads(text))


def load_scenario(path: Union[str, Path]) -> Scenario:
    return Scenario.from_json(Path(path).read_text())


def save_scenario(scenario: Scenario, path: Union[str, Path]) -> None:
    Path(path).write_text(scenario.to_json() + "\n")


# Default coverage-class mean SINRs: 25 / 12 / 0 dB span the MCS table.
DEFAULT_CLASS_SINR = {
    CoverageClass.EXCELLENT: (25.0, 2.0),
    CoverageClass.MEDIUM: (12.0, 2.5),
    CoverageClass.POOR: (0.0, 3.0),
}


def _phases(*entries) -> tuple[AppPhase, ...]:
    out = []
    for kind, start, dur, rate in entries:
        out.append(AppPhase(kind, start, dur, rate))
    return tuple(out)


def default_scenario() -> Scenario:
    """Three-UE reference cell with a 30 s traffic timeline.

    The timeline alternates full-buffer speed tests (high-load seconds) with
    moderate video/messaging mixes (partial-load seconds) so sessions of 10 s
    and up can satisfy both scheduling-constraint bands.
    """
    v = AppKind.VIDEO_STREAM
    m = AppKind.MESSAGING
    st = AppKind.SPEED_TEST
    ues = (
        UeProfile(
            ue_id=0,
            coverage_class=CoverageClass.EXCELLENT,
            mean_sinr_db=DEFAULT_CLASS_SINR[CoverageClass.EXCELLENT][0],
            sinr_stddev_db=DEFAULT_CLASS_SINR[CoverageClass.EXCELLENT][1],
            traffic_profile=_phases(
                (st, 0.0, 4.0, FULL_BUFFER),
                (v, 4.0, 6.0, 6e6),
                (m, 10.0, 4.0, 0.6e6),
                (v, 14.0, 8.0, 6e6),
                (m, 22.0, 8.0, 0.6e6),
            ),
        ),
        UeProfile(
            ue_id=1,
            coverage_class=CoverageClass.MEDIUM,
            mean_sinr_db=DEFAULT_CLASS_SINR[CoverageClass.MEDIUM][0],
            sinr_stddev_db=DEFAULT_CLASS_SINR[CoverageClass.MEDIUM][1],
            traffic_profile=_phases(
                (m, 0.0, 4.0, 0.4e6),
                (v, 4.0, 6.0, 4e6),
                (st, 10.0, 4.0, FULL_BUFFER),
                (v, 14.0, 8.0, 4e6),
                (m, 22.0, 4.0, 0.4e6),
                (v, 26.0, 4.0, 4e6),
            ),
        ),
        UeProfile(
            ue_id=2,
            coverage_class=CoverageClass.POOR,
            mean_sinr_db=DEFAULT_CLASS_SINR[CoverageClass.POOR][0],
            sinr_stddev_db=DEFAULT_CLASS_SINR[CoverageClass.POOR][1],
            traffic_profile=_phases(
                (m, 0.0, 4.0, 0.2e6),
                (v, 4.0, 6.0, 2.5e6),
                (m, 10.0, 4.0, 0.2e6),
                (v, 14.0, 8.0, 2.5e6),
                (st, 22.0, 4.0, FULL_BUFFER),
                (v, 26.0, 4.0, 2.5e6),
            ),
        ),
    )
    return Scenario(name="default-three-ue", ues=ues)


def offered_rate_at(profile: UeProfile, t_s: float) -> float:
    """Offered rate of a UE at an instant; FULL_BUFFER during speed tests."""
    for p in profile.traffic_profile:
        if p.start_s <= t_s < p.end_s:
            return p.offered_rate_bps
    return 0.0
