"""Non-binary QC-LDPC toolkit: construction, structure verification,
layered Min-Max decoding, shuffle-network scheduling and cost modeling."""

from .gf import GF2m, field_new
from .construct import (
    CLASS_I,
    CLASS_II,
    BaseMatrix,
    CodeSpec,
    ParityCheck,
    SubgroupIndexing,
    build_base_class1,
    build_base_class2,
    build_code,
    cpm,
    index_subgroup,
    location_vector,
    random_index_subgroup,
)
from .decode import (
    LAYER_I,
    LAYER_II,
    DecodeResult,
    DecoderConfig,
    LayerSchedule,
    build_layer_schedule,
    channel_reliability,
    check_node_brute_force,
    check_node_min_max,
    decode,
    permute_message,
    quantize,
    run_monte_carlo,
)
from .shuffle import (
    BenesNetwork,
    VnuPermutation,
    build_index_matrix,
    benes_route,
    class1_static_wiring,
    route_schedule,
    schedule_class1,
    schedule_class2,
    schedule_driven_decode,
    simulate,
    unified_class1_via_benes,
)
from .verify import PropertyReport, verify_class1, verify_class2
from .cost import CostBreakdown, CostParams, cost, render_report, savings

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
