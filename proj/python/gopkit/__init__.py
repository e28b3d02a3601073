"""Global orbit patterns of endofunctions of finite sets.

Functions are plain lists of images, gops are lists of periods plus the ambient size.
"""

from ._gopkit import (
    all_gops,
    analyze,
    census,
    count_gop,
    discretize,
    double_precision_cycle,
    enumerate_rigid,
    function_literal,
    gop_compare,
    gop_of,
    orbit_report,
    parse_function,
    parse_gop,
    rank,
    threshold,
    unrank,
)

__all__ = [
    "all_gops",
    "analyze",
    "census",
    "count_gop",
    "discretize",
    "double_precision_cycle",
    "enumerate_rigid",
    "function_literal",
    "gop_compare",
    "gop_of",
    "orbit_report",
    "parse_function",
    "parse_gop",
    "rank",
    "threshold",
    "unrank",
]

__version__ = "0.1.0"
