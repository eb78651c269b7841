"""Pasting schemes as plane graphs, hom lattices, and pasting certificates."""

from ._pastelab import (
    Path,
    PastingError,
    PastingScheme,
    SchemeInvalid,
    atomic_arrows,
    attach_bottom,
    bottom_cells,
    certify,
    coordinatize,
    cube_constraints,
    cube_points,
    delete_bottom_cell,
    delete_top_cell,
    dump_scheme,
    enumerate_paths,
    factor_atomic,
    generate_corpus,
    hom,
    hom_join,
    hom_meet,
    is_subcomputad,
    lies_above,
    load_scheme,
    make_path,
    path_str,
    pathify,
    power_composite,
    presentation,
    subdivide_edge,
    theta2,
    top_cells,
    verify_edge_subdivision,
    verify_hom_pushouts,
)

__all__ = [
    "Path",
    "PastingError",
    "PastingScheme",
    "SchemeInvalid",
    "atomic_arrows",
    "attach_bottom",
    "bottom_cells",
    "certify",
    "coordinatize",
    "cube_constraints",
    "cube_points",
    "delete_bottom_cell",
    "delete_top_cell",
    "dump_scheme",
    "enumerate_paths",
    "factor_atomic",
    "generate_corpus",
    "hom",
    "hom_join",
    "hom_meet",
    "is_subcomputad",
    "lies_above",
    "load_scheme",
    "make_path",
    "path_str",
    "pathify",
    "power_composite",
    "presentation",
    "subdivide_edge",
    "theta2",
    "top_cells",
    "verify_edge_subdivision",
    "verify_hom_pushouts",
]
