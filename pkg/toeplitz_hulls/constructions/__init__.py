from .construction_base import (
    ConstructionBase,
    ConstructionSpec,
    DerivativeConstruction,
    PowerConstruction,
    construction_for,
    derivative_code,
    power_code,
)
from .predicates import (
    PredicateVerdict,
    agrees_with_oracle,
    lcd_by_spectrum_euclidean,
    lcd_by_spectrum_hermitian,
    lcd_power_by_spectrum,
    one_dim_hull_by_spectrum,
    oracle_decision,
    spectral_verdict,
    tprime_lcd_equivalence,
)
