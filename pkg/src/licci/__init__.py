"""Partition-pair combinatorics of licci ideals: linkage, admissibility and a Weyl group oracle."""

from .admissibility import Status, Verdict, is_decoration, is_decoration_descent, is_decoration_smallest_chain, necessary_filters
from .constructions import BettiShape, betti_shape, doubling, hyperplane_section, mapping_cone_shifts
from .core import Decoration, Format, decoration_new, dominance_leq, format_of, squares_defect
from .enumgraph import LicciGraph, classes_by_format, enumerate_bfs, enumerate_levels, export
from .linkage import (
    LinkResult,
    generic_link,
    largest_minimal_link,
    link,
    neighbors,
    smallest_minimal_link,
    tight_double_link,
)
from .torclass import class_G_rank, huneke_family, p0_link, tor_profile

__version__ = "0.1.0"
