"""Model constants of the 1-D linear peridynamic wave equation."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import AlphaOrder, DomainError

#: Parameter values used by all shipped evolution scenarios.
DEFAULT_ALPHA = 0.1
DEFAULT_KAPPA = 0.5
DEFAULT_RHO = 1.0
DEFAULT_DELTA = 1.0


@dataclass(frozen=True)
class PeridynamicParams:
    """Elastic modulus kappa, density rho, horizon delta, order alpha.

    ``one_minus_alpha`` is stored explicitly so orders like 1 - 1e-20 keep
    their distance from 1 even though ``alpha`` itself rounds to 1.0 in
    double precision.  Every formula that involves 1 - alpha reads this
    field instead of recomputing the difference.
    """

    kappa: float = DEFAULT_KAPPA
    rho: float = DEFAULT_RHO
    delta: float = DEFAULT_DELTA
    alpha: float = DEFAULT_ALPHA
    one_minus_alpha: float | None = None

    def __post_init__(self):
        if self.one_minus_alpha is None:
            object.__setattr__(self, "one_minus_alpha", 1.0 - float(self.alpha))
        for name in ("kappa", "rho", "delta"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a positive real, got {v!r}")
        # Validates 0 < alpha < 1 through the complement.
        object.__setattr__(
            self, "order", AlphaOrder(float(self.alpha), float(self.one_minus_alpha))
        )

    @classmethod
    def near_classical(
        cls, one_minus_alpha: float, kappa=DEFAULT_KAPPA, rho=DEFAULT_RHO, delta=DEFAULT_DELTA
    ) -> "PeridynamicParams":
        """Parameters with alpha = 1 - one_minus_alpha, complement kept exact."""
        return cls(
            kappa=kappa,
            rho=rho,
            delta=delta,
            alpha=1.0 - float(one_minus_alpha),
            one_minus_alpha=float(one_minus_alpha),
        )
