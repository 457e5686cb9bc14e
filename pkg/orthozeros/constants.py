from __future__ import annotations

# Column order of the per-degree zero tables.
ZERO_TABLE_PRESETS = (
    "jacobi-paper",
    "chebyshev1",
    "gegenbauer-paper",
    "legendre",
    "laguerre-classical",
    "laguerre-general",
    "hermite",
)

# Rows of the error-estimate tables.
ERROR_TABLE_PRESETS = (
    "legendre",
    "jacobi-paper",
    "gegenbauer-paper",
    "chebyshev1",
    "laguerre-classical",
    "laguerre-general",
    "hermite",
)

TABLE_DEGREES = (20, 25)

# Exact-error bound for the Chebyshev comparison.
EXACT_ERROR_BOUND = 1e-15

# Oracle bounds used by the verification suite.
POLISH_BOUND = 1e-12
PROPOSITION_BOUND = 1e-12
