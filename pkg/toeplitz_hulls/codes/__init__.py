from .linear_code import (
    CodeReport,
    LinearCode,
    analyze_code,
    dual,
    from_generator,
    gram_matrix,
    griesmer_defect,
    hull_dimension,
    is_lcd,
)
from .weights import (
    WeightEnumerator,
    distance_from_distribution,
    is_formally_self_dual,
    krawtchouk,
    macwilliams_dual_distribution,
    min_distance,
    weight_distribution,
)
