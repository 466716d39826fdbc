"""Clique -> Grid Tiling* -> 2-SCSS-(2k-1, 1) instance generation and its certificate."""

from src.hardness.gadget import (
    CanonicalPath,
    CanonicalPathId,
    CertificateVerdict,
    GadgetParams,
    GeneratedInstance,
    LayoutRecord,
    Orientation,
    Shortcut,
    ShortcutKind,
    build_yes_solution,
    certify,
    grid_label,
    gridtiling_to_scss,
    shortcut_label,
)
from src.hardness.gridtiling import (
    GridTilingInstance,
    UndirectedGraph,
    clique_to_gridtiling,
    gridtiling_bruteforce,
    parse_clique_graph,
    random_gridtiling,
    singleton_mismatch,
)

__all__ = [
    "UndirectedGraph",
    "GridTilingInstance",
    "clique_to_gridtiling",
    "gridtiling_bruteforce",
    "random_gridtiling",
    "singleton_mismatch",
    "parse_clique_graph",
    "GadgetParams",
    "Orientation",
    "CanonicalPathId",
    "CanonicalPath",
    "ShortcutKind",
    "Shortcut",
    "LayoutRecord",
    "GeneratedInstance",
    "CertificateVerdict",
    "gridtiling_to_scss",
    "build_yes_solution",
    "certify",
    "grid_label",
    "shortcut_label",
]
