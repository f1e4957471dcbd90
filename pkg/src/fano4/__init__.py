"""Exact numerical invariants of Fano 4-folds obtained from P^4 by point
blow-ups, surface blow-ups and flips of exceptional lines."""

from .chow import (
    CurveClass,
    DivisorClass,
    Lattice,
    LatticeMismatchError,
    RingModel,
    anticanonical,
    blowup_points_ring,
    classify_curve,
    curve_anticanonical_degree,
    quartic_degree,
    section_degrees,
    verify_linear_identity,
)
from .families import (
    FamilySpec,
    UnsupportedOpenQuestion,
    check_tables,
    decomposition_certificate,
    emit_table,
    family_A,
    family_B,
    family_C,
    family_E,
    fano_model_W,
    general_position_audit,
)
from .invariants import (
    FourfoldRecord,
    ParityError,
    blow_down_surface,
    blow_up_point,
    blow_up_surface,
    flip_lines,
    p4_record,
)
from .surfaces import SurfaceData, SurfaceModel, del_pezzo, intersect, k3_sextic, quadric, surface_data
from .threefolds import ThreefoldRecord, base_table, blow_up_point3, elementary_bound_scan, h0_minusK

__version__ = "0.1.0"
