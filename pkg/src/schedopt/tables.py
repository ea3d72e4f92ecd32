"""Link-level constant tables: MCS decode thresholds, per-RB capacity, CQI mapping.

The 28-entry MCS ladder follows the usual NR table-2 spectral efficiencies
(QPSK through 256QAM). Decode thresholds are a fixed 1.1 dB ladder starting at
-6 dB, which keeps link adaptation monotone and spans the CQI range.
"""

from __future__ import annotations

import numpy as np

N_MCS = 28

# SINR (dB) at which each MCS decodes with 50% block error probability.
MCS_SINR_THRESHOLD_DB = np.array([-6.0 + 1.1 * i for i in range(N_MCS)], dtype=np.float64)

# Spectral efficiency (bits/symbol) per MCS, 3GPP TS 38.214 table 5.1.3.1-2 values.
MCS_SPECTRAL_EFFICIENCY = np.array(
    [
        0.2344, 0.3770, 0.6016, 0.8770, 1.1758, 1.4766, 1.6953, 1.9141,
        2.1602, 2.4063, 2.5703, 2.7305, 3.0293, 3.3223, 3.6094, 3.9023,
        4.2129, 4.5234, 4.8164, 5.1152, 5.3320, 5.5547, 5.8906, 6.2266,
        6.5703, 6.9141, 7.1602, 7.4063,
    ],
    dtype=np.float64,
)

# One RB-slot carries 12 subcarriers x 14 symbols = 168 resource elements.
RES_PER_RB = 168
BITS_PER_RB = np.floor(RES_PER_RB * MCS_SPECTRAL_EFFICIENCY + 0.5).astype(np.int64)

CQI_MAX = 15.0
# Affine CQI map: -6 dB -> CQI 0, +24 dB -> CQI 15 (2 dB per CQI step).
CQI_DB_OFFSET = 6.0
CQI_DB_PER_STEP = 2.0


def sinr_to_cqi(sinr_db: float) -> float:
    """Instantaneous CQI for a given SINR, clamped to [0, 15]."""
    cqi = (sinr_db + CQI_DB_OFFSET) / CQI_DB_PER_STEP
    return min(max(cqi, 0.0), CQI_MAX)


def cqi_to_sinr_db(cqi: float) -> float:
    """Inverse of sinr_to_cqi on the unclamped interior."""
    return cqi * CQI_DB_PER_STEP - CQI_DB_OFFSET


def mcs_from_sinr(est_sinr_db: float) -> int:
    """Highest MCS whose decode threshold is satisfied; MCS 0 is the floor."""
    idx = int(np.searchsorted(MCS_SINR_THRESHOLD_DB, est_sinr_db, side="right")) - 1
    return max(idx, 0)


def pdcch_aggregation_level(cqi: float, adaptive: bool) -> int:
    """CCE aggregation level for one PDCCH assignment, banded by CQI."""
    if not adaptive:
        return 8
    if cqi >= 12:
        return 2
    if cqi >= 8:
        return 4
    if cqi >= 4:
        return 8
    return 16


AGGREGATION_LEVELS = (2, 4, 8, 16)
