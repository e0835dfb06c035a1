"""Frozen numeric configuration shared across modules."""

# Terms per chunk for deterministic chunked summation.  Large enough to
# amortize reduction overhead, small enough that per-chunk error is
# negligible next to the compensated cross-chunk accumulation.
CHUNK_SIZE = 4096

# Significant decimal digits carried by extended-precision (oracle) values.
EXTENDED_DPS = 36

# Minimum distance of eta from 2*pi*Z before alpha = 1 - exp(-i*eta)
# degenerates (|alpha| ~ 0.0998 at this distance).
ETA_DIST_EPS = 0.1

# Widest allowed |sigma| for weighted single sums; beyond this the weights
# m**(-sigma) risk overflow without any consumer needing them.
SIGMA_WINDOW = 2.0

# Budgets (term counts / grid side) for the different evaluation routes.
SINGLE_SUM_BUDGET = 10**8
ORACLE_BUDGET = 10**7
PREFIX_BUDGET = 2 * 10**7 + 64
BRUTE_FORCE_BUDGET = 3 * 10**4

# Default slope tolerances for growth-exponent verdicts.
SLOPE_TOL_CLEAN = 0.10
SLOPE_TOL_NOISY = 0.15
