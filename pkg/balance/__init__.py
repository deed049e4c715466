from .balance import (
    BalanceReport,
    UniformityReport,
    balance_tolerance,
    determinant_rows,
    even_m_witness,
    is_balanced,
    is_uniform,
)
from .pairing import (
    PairingMap,
    StepConstants,
    Verdict,
    build_pairing,
    half_plane_counts,
    predicted_pairing,
    step_constants,
    verify_antisymmetry,
    verify_pairing_formula,
)
