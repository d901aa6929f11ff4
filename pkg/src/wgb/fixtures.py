"""Pinned reference values the benchmark harness checks itself against.

Each entry carries a stable id and a human-readable source tag so a diff
names exactly which reference value disagreed.  FIXTURES_VERSION bumps
whenever a pin changes.
"""

FIXTURES_VERSION = 1

# measured degree of regularity for dense random weighted homogeneous
# complete intersections, degrees (6,6,6), as the weight order varies
DREG_BY_WEIGHT_ORDER = [
    {
        "id": "dreg-3var-w321",
        "weights": (3, 2, 1),
        "degrees": (6, 6, 6),
        "dreg": 13,
        "macaulay_weak": 15,
        "macaulay_snp": 13,
    },
    {
        "id": "dreg-3var-w312",
        "weights": (3, 1, 2),
        "degrees": (6, 6, 6),
        "dreg": 14,
        "macaulay_weak": 15,
        "macaulay_snp": 14,
    },
    {
        "id": "dreg-3var-w123",
        "weights": (1, 2, 3),
        "degrees": (6, 6, 6),
        "dreg": 15,
        "macaulay_weak": 15,
        "macaulay_snp": 15,
    },
]

# impact of the variable order on the bounds for degrees (60,60,60,60)
ORDER_IMPACT = [
    {
        "id": "order-impact-w20-5-5-1",
        "weights": (20, 5, 5, 1),
        "degrees": (60, 60, 60, 60),
        "dreg": 210,
        "macaulay_weak": 229,
        "macaulay_snp": 210,
        "conjectured": 210,
    },
    {
        "id": "order-impact-w1-5-5-20",
        "weights": (1, 5, 5, 20),
        "degrees": (60, 60, 60, 60),
        "dreg": 220,
        "macaulay_weak": 229,
        "macaulay_snp": 229,
        "conjectured": 220,
    },
]

# reference coefficient sequences of quotient series
#
# ci-steps-331: the reference plot's data; the companion text lists the
# degrees as (9,6,3) but the plotted sequence (length 18, peak 3, plateau
# width 5) is the one for (12,9,3), which is what we pin.  Do not "fix"
# this to match the caption.
SERIES_SEQUENCES = [
    {
        "id": "ci-steps-331",
        "weights": (3, 3, 1),
        "degrees": (12, 9, 3),
        "coeffs": [1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1],
        "truncate": False,
    },
    {
        "id": "semiregular-truncated-331",
        "weights": (3, 3, 1),
        "degrees": (12, 9, 6, 6, 3),
        "coeffs": [1, 1, 1, 2, 2, 2, 1, 1, 1],
        "truncate": True,
        "truncation_degree": 8,
    },
    {
        "id": "ci-nonmonotone-322",
        "weights": (3, 2, 2),
        "degrees": (6, 6, 6),
        "coeffs": [1, 0, 2, 1, 3, 2, 2, 3, 1, 2, 0, 1],
        "truncate": False,
    },
    {
        "id": "ci-widestep-421",
        "weights": (4, 2, 1),
        "degrees": (8, 8, 2),
        "coeffs": [1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1],
        "truncate": False,
    },
]

# the (2,..,2,1)-weight pattern instances: ideal degree column
DLP_PATTERN = [
    {
        "id": "dlp-pattern-n4",
        "weights": (2, 2, 2, 1),
        "degrees": (8, 8, 8, 8),
        "ideal_degree": 512,
    },
    {
        "id": "dlp-pattern-n5",
        "weights": (2, 2, 2, 2, 1),
        "degrees": (16, 16, 16, 16, 16),
        "ideal_degree": 65536,
    },
]
