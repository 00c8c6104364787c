"""Colour and layer symmetry groups of two-colour woven designs.

Designs are passed as lists of strings over '#' (black, weft over) and '.'
(white, warp over), one string per row of the repeating block.
"""

import json

from ._weavesym import (
    ParseError,
    catalog_stats,
    color_group_svg,
    gen_twill,
    layer_svg,
    layer_symbol,
    parse_design,
    render_visible,
    serialize_design,
    summary,
    verify_catalog,
)
from ._weavesym import _report_json, _search

__all__ = [
    "ParseError",
    "analyze",
    "catalog_stats",
    "color_group_svg",
    "gen_twill",
    "layer_svg",
    "layer_symbol",
    "parse_design",
    "render_visible",
    "search",
    "serialize_design",
    "summary",
    "verify_catalog",
]


def analyze(rows):
    """Full analysis report as a dict (same schema as `weavesym analyze --json`)."""
    return json.loads(_report_json(list(rows)))


def search(pair=None, layer=None, max_block=(8, 8), limit=5):
    """Designs realising a pair such as "c2mm,c1m1" or a layer symbol.

    Returns a list of (rows, summary) tuples.
    """
    if (pair is None) == (layer is None):
        raise ValueError("give exactly one of pair or layer")
    width, height = max_block
    return _search(pair or "", layer or "", width, height, limit)
