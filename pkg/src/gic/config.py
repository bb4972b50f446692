"""Runtime defaults and environment-variable overrides.

Resolution order everywhere in the package: explicit argument, then the
``GIC_*`` environment variable, then the built-in default.  ``None`` for
``precision_bits`` means "choose automatically from the size of the numbers
involved" (callers decide what that means for their computation).
"""

import os
from dataclasses import dataclass

DEFAULT_TRIAL_DIVISION_BOUND = 10 ** 6
DEFAULT_SEED = 0

ENV_PRECISION = "GIC_PRECISION_BITS"
ENV_TRIAL_BOUND = "GIC_TRIAL_DIVISION_BOUND"
ENV_SEED = "GIC_SEED"

PRECISION_CAP = 2 ** 16          # hard ceiling for adaptive escalation


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Settings:
    precision_bits: int | None = None      # None = automatic
    trial_division_bound: int = DEFAULT_TRIAL_DIVISION_BOUND
    seed: int = DEFAULT_SEED


def resolve_settings(precision_bits=None, trial_division_bound=None, seed=None):
    """Combine explicit values with environment overrides and defaults."""
    if precision_bits is None:
        precision_bits = _env_int(ENV_PRECISION)
    if trial_division_bound is None:
        trial_division_bound = _env_int(ENV_TRIAL_BOUND)
        if trial_division_bound is None:
            trial_division_bound = DEFAULT_TRIAL_DIVISION_BOUND
    if seed is None:
        seed = _env_int(ENV_SEED)
        if seed is None:
            seed = DEFAULT_SEED
    if precision_bits is not None and precision_bits < 16:
        raise ValueError("precision must be at least 16 bits")
    if trial_division_bound < 2:
        raise ValueError("trial division bound must be at least 2")
    return Settings(precision_bits, trial_division_bound, seed)
