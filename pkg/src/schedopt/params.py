"""The ten tunable scheduler parameters: grids, validation, encoding, sampling.

Quantized parameters are stored as integer grid indices so equality and
hashing are exact; real values are derived views. Six of the ten parameters
(ibler_target through harq_enhancement) are the classically published
scheduler knobs; the remaining four (cqi_filter_coeff, pdcch_adaptive,
fairness_exponent, max_mcs_cap) are reconstructions of unnamed vendor knobs,
each wired to a concrete simulator hook.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    ConfigurationError,
    DegenerateIblerError,
    OffGridError,
    OutOfRangeError,
)

_GRID_EPS = 1e-6


class ParamKind(Enum):
    QUANTIZED_REAL = "quantized_real"
    BOOLEAN = "boolean"
    INTEGER_RANGE = "integer_range"


@dataclass(frozen=True)
class ParameterSpec:
    """Range, quantization, and optional SME-recommended sub-range of one knob."""

    name: str
    kind: ParamKind
    lo: float
    hi: float
    step: Optional[float] = None
    sme_range: Optional[tuple[float, float]] = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ConfigurationError(f"{self.name}: lo {self.lo} > hi {self.hi}")
        if self.kind is ParamKind.QUANTIZED_REAL:
            if self.step is None or self.step <= 0:
                raise ConfigurationError(f"{self.name}: quantized real needs step > 0")
            span = (self.hi - self.lo) / self.step
            if abs(span - round(span)) > _GRID_EPS:
                raise ConfigurationError(f"{self.name}: (hi - lo) / step is not an integer")
        if self.sme_range is not None:
            a, b = self.sme_range
            if not (self.lo - _GRID_EPS <= a <= b <= self.hi + _GRID_EPS):
                raise ConfigurationError(f"{self.name}: SME range {self.sme_range} outside [{self.lo}, {self.hi}]")

    @property
    def n_values(self) -> int:
        if self.kind is ParamKind.BOOLEAN:
            return 2
        if self.kind is ParamKind.INTEGER_RANGE:
            return int(round(self.hi - self.lo)) + 1
        return int(round((self.hi - self.lo) / self.step)) + 1

    def value_at(self, index: int) -> Union[float, int, bool]:
        if not 0 <= index < self.n_values:
            raise OutOfRangeError(self.name, f"grid index {index} outside [0, {self.n_values - 1}]")
        if self.kind is ParamKind.BOOLEAN:
            return bool(index)
        if self.kind is ParamKind.INTEGER_RANGE:
            return int(round(self.lo)) + index
        # Round the derived view so 0.01-step grids print as exact decimals.
        return round(self.lo + index * self.step, 10)

    def index_of(self, value) -> int:
        if self.kind is ParamKind.BOOLEAN:
            if value in (True, False, 0, 1):
                return int(bool(value))
            raise OffGridError(self.name, f"{value!r} is not a boolean")
        if self.kind is ParamKind.INTEGER_RANGE:
            if float(value) != int(value):
                raise OffGridError(self.name, f"{value!r} is not an integer")
            idx = int(value) - int(round(self.lo))
            if not 0 <= idx < self.n_values:
                raise OutOfRangeError(self.name, f"{value!r} outside [{int(self.lo)}, {int(self.hi)}]")
            return idx
        pos = (float(value) - self.lo) / self.step
        idx = int(math.floor(pos + 0.5))
        if abs(pos - idx) > _GRID_EPS:
            raise OffGridError(self.name, f"{value!r} not on the {self.step}-step grid")
        if not 0 <= idx < self.n_values:
            raise OutOfRangeError(self.name, f"{value!r} outside [{self.lo}, {self.hi}]")
        return idx

    def sme_index_range(self) -> tuple[int, int]:
        if self.sme_range is None:
            raise ConfigurationError(f"{self.name}: no SME recommended range configured")
        return self.index_of(self.sme_range[0]), self.index_of(self.sme_range[1])


# Canonical parameter order; the first six are the published table rows.
PARAMETER_SPECS: tuple[ParameterSpec, ...] = (
    ParameterSpec("ibler_target", ParamKind.QUANTIZED_REAL, 0.0, 1.0, 0.01, sme_range=(0.05, 0.15)),
    ParameterSpec("adaptive_mcs_selection", ParamKind.BOOLEAN, 0, 1, sme_range=(0, 1)),
    ParameterSpec("pmi_enhancement", ParamKind.BOOLEAN, 0, 1, sme_range=(1, 1)),
    ParameterSpec("mcs_filter", ParamKind.QUANTIZED_REAL, 0.0, 2.0, 0.01, sme_range=(0.0, 0.5)),
    ParameterSpec("initial_rank", ParamKind.INTEGER_RANGE, 1, 8, sme_range=(2, 6)),
    ParameterSpec("harq_enhancement", ParamKind.BOOLEAN, 0, 1, sme_range=(0, 1)),
    ParameterSpec("cqi_filter_coeff", ParamKind.QUANTIZED_REAL, 0.0, 1.0, 0.05, sme_range=(0.05, 0.4)),
    ParameterSpec("pdcch_adaptive", ParamKind.BOOLEAN, 0, 1, sme_range=(1, 1)),
    ParameterSpec("fairness_exponent", ParamKind.QUANTIZED_REAL, 0.0, 2.0, 0.1, sme_range=(0.8, 1.2)),
    ParameterSpec("max_mcs_cap", ParamKind.INTEGER_RANGE, 0, 27, sme_range=(24, 27)),
)

PARAM_NAMES = tuple(s.name for s in PARAMETER_SPECS)
TABLE_SPECS = PARAMETER_SPECS[:6]  # the six published rows

_SPEC_BY_NAME = {s.name: s for s in PARAMETER_SPECS}
_IBLER_INDEX = PARAM_NAMES.index("ibler_target")


@dataclass(frozen=True)
class ParameterSet:
    """One point of the ten-dimensional action space, stored as grid indices."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != len(PARAMETER_SPECS):
            raise ConfigurationError(f"expected {len(PARAMETER_SPECS)} indices, got {len(self.indices)}")

    @classmethod
    def from_values(cls, **values) -> "ParameterSet":
        unknown = set(values) - set(PARAM_NAMES)
        if unknown:
            raise ConfigurationError(f"unknown parameters: {sorted(unknown)}")
        missing = set(PARAM_NAMES) - set(values)
        if missing:
            raise ConfigurationError(f"missing parameters: {sorted(missing)}")
        indices = tuple(spec.index_of(values[spec.name]) for spec in PARAMETER_SPECS)
        return validate(cls(indices))

    def value(self, name: str):
        spec = _SPEC_BY_NAME[name]
        return spec.value_at(self.indices[PARAM_NAMES.index(name)])

    def values(self) -> dict:
        return {spec.name: spec.value_at(idx) for spec, idx in zip(PARAMETER_SPECS, self.indices)}

    # Named accessors for the simulator's benefit.
    @property
    def ibler_target(self) -> float:
        return self.value("ibler_target")

    @property
    def adaptive_mcs_selection(self) -> bool:
        return self.value("adaptive_mcs_selection")

    @property
    def pmi_enhancement(self) -> bool:
        return self.value("pmi_enhancement")

    @property
    def mcs_filter(self) -> float:
        return self.value("mcs_filter")

    @property
    def initial_rank(self) -> int:
        return self.value("initial_rank")

    @property
    def harq_enhancement(self) -> bool:
        return self.value("harq_enhancement")

    @property
    def cqi_filter_coeff(self) -> float:
        return self.value("cqi_filter_coeff")

    @property
    def pdcch_adaptive(self) -> bool:
        return self.value("pdcch_adaptive")

    @property
    def fairness_exponent(self) -> float:
        return self.value("fairness_exponent")

    @property
    def max_mcs_cap(self) -> int:
        return self.value("max_mcs_cap")

    def to_json(self) -> str:
        """Canonical single-line JSON with fixed key order (for logging)."""
        return json.dumps(self.values(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "ParameterSet":
        return cls.from_values(**json.loads(text))


def validate(ps: ParameterSet) -> ParameterSet:
    """Return the set unchanged if every field is on-grid and in range."""
    for spec, idx in zip(PARAMETER_SPECS, ps.indices):
        if not 0 <= idx < spec.n_values:
            raise OutOfRangeError(spec.name, f"grid index {idx} outside [0, {spec.n_values - 1}]")
    if ps.indices[_IBLER_INDEX] == PARAMETER_SPECS[_IBLER_INDEX].n_values - 1:
        raise DegenerateIblerError()
    return ps


def cardinality(specs: Iterable[ParameterSpec]) -> int:
    """Number of distinct parameter combinations (empty product = 1)."""
    total = 1
    for spec in specs:
        total *= spec.n_values
    return total


def decode_action(raw: Sequence[float]) -> ParameterSet:
    """Map a post-squash vector in [-1, 1]^10 onto the parameter grid.

    Components map affinely onto each range, then snap to the nearest grid
    point (half rounds up). Booleans are true iff the component is > 0.
    An IBLER target landing on 1.0 snaps down one step to stay valid.
    """
    raw = np.asarray(raw, dtype=np.float64)
    if raw.shape != (len(PARAMETER_SPECS),):
        raise ValueError(f"expected {len(PARAMETER_SPECS)} components, got shape {raw.shape}")
    if np.any(np.abs(raw) > 1.0 + 1e-9):
        raise ValueError("decode_action input outside [-1, 1]: squash contract violated")
    indices = []
    for spec, c in zip(PARAMETER_SPECS, raw):
        if spec.kind is ParamKind.BOOLEAN:
            idx = 1 if c > 0.0 else 0
        else:
            t = (min(max(float(c), -1.0), 1.0) + 1.0) / 2.0
            idx = int(math.floor(t * (spec.n_values - 1) + 0.5))
            idx = min(max(idx, 0), spec.n_values - 1)
        indices.append(idx)
    if indices[_IBLER_INDEX] == PARAMETER_SPECS[_IBLER_INDEX].n_values - 1:
        indices[_IBLER_INDEX] -= 1
    return validate(ParameterSet(tuple(indices)))


def encode_action(ps: ParameterSet) -> np.ndarray:
    """Pre-squash components in (-1, 1) that decode back to the same set."""
    out = np.empty(len(PARAMETER_SPECS), dtype=np.float64)
    for i, (spec, idx) in enumerate(zip(PARAMETER_SPECS, ps.indices)):
        if spec.kind is ParamKind.BOOLEAN:
            c = 0.999999 if idx else -0.999999
        else:
            t = idx / (spec.n_values - 1)
            c = 2.0 * t - 1.0
            c = min(max(c, -0.999999), 0.999999)
        out[i] = c
    return out


class SampleMode(Enum):
    MANUAL_RANGE = "manual_range"
    UNIFORM_RANDOM = "uniform_random"


def sample_candidate(
    mode: SampleMode,
    specs: Sequence[ParameterSpec] = PARAMETER_SPECS,
    rng: np.random.Generator = None,
) -> ParameterSet:
    """Draw one parameter set, either over the full grids or the SME sub-ranges.

    The full-grid draw excludes the degenerate IBLER point 1.0 so every sample
    validates.
    """
    if rng is None:
        raise ValueError("sample_candidate requires an explicit rng")
    indices = []
    for spec in specs:
        if mode is SampleMode.MANUAL_RANGE:
            lo, hi = spec.sme_index_range()
        else:
            lo, hi = 0, spec.n_values - 1
            if spec.name == "ibler_target":
                hi -= 1  # 1.0 never validates
        indices.append(int(rng.integers(lo, hi + 1)))
    return validate(ParameterSet(tuple(indices)))


def sme_baseline() -> ParameterSet:
    """The SME-recommended operating point used as the experiment baseline."""
    return ParameterSet.from_values(
        ibler_target=0.10,
        adaptive_mcs_selection=True,
        pmi_enhancement=True,
        mcs_filter=0.20,
        initial_rank=4,
        harq_enhancement=True,
        cqi_filter_coeff=0.20,
        pdcch_adaptive=True,
        fairness_exponent=1.0,
        max_mcs_cap=27,
    )
