"""Exact lattice-polygon kernel: Pick counts, decompositions and certificates."""

from ._core import (
    DecomposeError,
    GenerationExhausted,
    HullError,
    MalformedCertificate,
    Polygon,
    PolygonError,
    __version__,
    area2,
    boundary_count,
    check_certificate,
    classify_point,
    convex_hull,
    decompose,
    extreme_point_count,
    find_pocket,
    generate_polygon,
    interior_count,
    is_convex,
    is_elementary,
    is_simple,
    pick_area2,
    render_svg,
    rotate_vertices,
    verify_pick,
)

__all__ = [
    "DecomposeError",
    "GenerationExhausted",
    "HullError",
    "MalformedCertificate",
    "Polygon",
    "PolygonError",
    "__version__",
    "area2",
    "boundary_count",
    "check_certificate",
    "classify_point",
    "convex_hull",
    "decompose",
    "extreme_point_count",
    "find_pocket",
    "generate_polygon",
    "interior_count",
    "is_convex",
    "is_elementary",
    "is_simple",
    "pick_area2",
    "render_svg",
    "rotate_vertices",
    "verify_pick",
]
